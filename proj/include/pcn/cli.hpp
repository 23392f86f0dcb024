#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcn::cli
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int invalid_coloring = 2;
        inline constexpr int timeout = 3;
        inline constexpr int claim_fail = 4;
        inline constexpr int skips_only = 5;
        inline constexpr int usage = 64;
        inline constexpr int io = 66;
    }

    /// Runs one `pcn` invocation. `args` excludes the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
