#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace derspec {

// Every failure the library can signal.  Functions document which of these
// they may throw; anything tagged internal_error indicates a bug in the
// library itself, never bad input.
enum class errc {
    malformed_text,        // partition text violates the grammar
    not_weakly_decreasing, // parts increase somewhere
    zero_part,             // a part is not a positive integer
    empty_partition,       // operation needs at least one part
    size_mismatch,         // partitions of different sizes compared
    not_comparable,        // dominance-chain target does not dominate source
    shape_too_large,       // skew shape exceeds the brute-force cell cap
    inner_not_contained,   // skew inner shape sticks out of the outer shape
    denominator_zero,      // determinant denominator vanished
    too_large,             // argument exceeds the character-oracle cap
    too_small,             // argument below the domain of the predicate
    bad_index,             // index or range argument out of bounds
    internal_error,        // invariant violated inside the library
};

constexpr std::string_view errc_name(errc code) noexcept {
    switch (code) {
        case errc::malformed_text: return "MalformedText";
        case errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
        case errc::zero_part: return "ZeroPart";
        case errc::empty_partition: return "EmptyPartition";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::not_comparable: return "NotComparable";
        case errc::shape_too_large: return "ShapeTooLarge";
        case errc::inner_not_contained: return "InnerNotContained";
        case errc::denominator_zero: return "DenominatorZero";
        case errc::too_large: return "TooLarge";
        case errc::too_small: return "TooSmall";
        case errc::bad_index: return "BadIndex";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

} // namespace derspec
