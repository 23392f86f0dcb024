#pragma once

#include <stdexcept>
#include <string>

namespace pcn
{
    /// Malformed graph input: loops, duplicate edges, ids out of range, duplicate labels.
    class InvalidGraph : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A family parameter or family-spec string that cannot be honoured.
    class InvalidSpec : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Coloring that is partial, non-positive, or sized for a different graph.
    class InvalidColoring : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class LabelNotFound : public std::out_of_range
    {
    public:
        using std::out_of_range::out_of_range;
    };

    /// Oracle asked to work outside the instance sizes it can enumerate.
    class SizeExceeded : public std::length_error
    {
    public:
        using std::length_error::length_error;
    };
}
