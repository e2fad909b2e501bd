#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kronstab {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so every partition has exactly one
/// representation; the empty partition is the unique partition of 0.
class Partition {
  public:
    Partition() = default;

    /// Throws DomainError unless `parts` is weakly decreasing and
    /// non-negative. Zeros are allowed only as a trailing run.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Zero-padded 1-based access: returns 0 beyond the length.
    int at(int i) const;

    /// Row i (0-based) without bounds padding.
    int operator[](std::size_t i) const noexcept { return parts_[i]; }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition &p) const noexcept;
};

/// Ordered pair (plus, minus) of partitions.
struct DoublePartition {
    Partition plus;
    Partition minus;

    int size() const noexcept { return plus.size() + minus.size(); }
    friend bool operator==(const DoublePartition &, const DoublePartition &) = default;
    friend auto operator<=>(const DoublePartition &, const DoublePartition &) = default;
};

/// Parses "8,5,2", "2^3,1^4", "-" or "" (empty partition).
Partition parse_partition(std::string_view text);

/// Canonical text: runs of length >= 3 use caret notation, "-" for the
/// empty partition.
std::string format_partition(const Partition &p);

/// Parses "plus;minus", e.g. "2;2" or "1;-".
DoublePartition parse_double_partition(std::string_view text);
std::string format_double_partition(const DoublePartition &p);

/// Parses "a / b / c"; ParseError columns refer to the whole text.
std::array<Partition, 3> parse_triple(std::string_view text);
std::array<DoublePartition, 3> parse_double_triple(std::string_view text);
std::string format_triple(const Partition &a, const Partition &b, const Partition &c);

/// lambda_i with the convention lambda_i = 0 for i > length. i >= 1.
int part_at(const Partition &p, int i);

/// Partwise p + d * direction.
Partition add_scaled(const Partition &p, int d, const Partition &direction);

/// Double-partition version, applied independently to both halves.
DoublePartition add_scaled(const DoublePartition &p, int d, const DoublePartition &direction);

/// d * p, partwise.
Partition scale(const Partition &p, int d);

Partition conjugate(const Partition &p);

/// The partition without its first part.
Partition drop_first(const Partition &p);

/// True if the Young diagram of `inner` fits inside `outer`.
bool contains(const Partition &outer, const Partition &inner);

/// Number of standard Young tableaux (hook-length formula).
mpz_class dim_sn(const Partition &p);

/// Dimension of the Schur functor S^p applied to an n-dimensional space
/// (Weyl dimension formula); 0 when length(p) > n.
mpz_class dim_gl(const Partition &p, int n);

/// All partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// All partitions of n with at most `max_length` parts.
std::vector<Partition> partitions_of(int n, int max_length);

/// Visits every partition of n with parts <= max_part, in decreasing
/// lexicographic order.
void for_each_partition(int n, int max_part, const std::function<void(const Partition &)> &visit);

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

} // namespace kronstab
