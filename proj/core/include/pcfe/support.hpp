#ifndef PCFE_SUPPORT_HPP
#define PCFE_SUPPORT_HPP

#include <string>

namespace pcfe {

// Support of a measure (or domain of a candidate): the whole line or a half line.
enum class Support { FullLine, NonNegativeHalfLine, NonPositiveHalfLine };

inline bool contains(Support s, double x) {
    switch (s) {
        case Support::FullLine: return true;
        case Support::NonNegativeHalfLine: return x >= 0.0;
        case Support::NonPositiveHalfLine: return x <= 0.0;
    }
    return false;
}

inline Support reflected(Support s) {
    switch (s) {
        case Support::NonNegativeHalfLine: return Support::NonPositiveHalfLine;
        case Support::NonPositiveHalfLine: return Support::NonNegativeHalfLine;
        default: return Support::FullLine;
    }
}

inline std::string to_string(Support s) {
    switch (s) {
        case Support::FullLine: return "full_line";
        case Support::NonNegativeHalfLine: return "nonnegative_half_line";
        case Support::NonPositiveHalfLine: return "nonpositive_half_line";
    }
    return "?";
}

Support support_from_string(const std::string& s);

}  // namespace pcfe

#endif
