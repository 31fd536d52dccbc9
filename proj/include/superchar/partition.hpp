#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superchar {

// Integer partition: weakly decreasing positive parts. The empty part list is
// the zero partition; it is a member of class B and of every (m,n)-hook.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Internal fast path; `parts` must already be weakly decreasing positive.
    static Partition unchecked(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long weight() const;

    // 1-based row access; rows beyond length() read as 0.
    int part(int i) const;

    Partition conjugate() const;

    // true iff mu_i <= lambda_i for all i
    bool contains(const Partition& mu) const;

    std::string to_string() const;  // "(6,4,4,2)"; "()" for the zero partition

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Stream order: weight ascending, then lexicographically larger parts first.
bool stream_less(const Partition& a, const Partition& b);

// lambda/mu is a horizontal strip: mu inside lambda, at most one box per column.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

// Class B membership: every part appears an even number of times.
bool is_doubled(const Partition& lambda);

struct DoubledCore {
    Partition core;  // core_{2i-1} = core_{2i} = lambda_{2i}
    int strip = 0;   // |lambda| - |core|
};

// The unique B-partition under lambda whose complement is a horizontal strip.
DoubledCore doubled_core(const Partition& lambda);

// Class B_r membership: the canonical core leaves a strip of length exactly r.
bool in_class_br(const Partition& lambda, int r);

// Conjunctive filters for partition enumeration.
struct EnumConstraints {
    enum class Class { All, B, Br };

    std::optional<int> max_part;                // lambda_1 <= p
    std::optional<int> max_length;              // length <= k
    std::optional<std::pair<int, int>> hook;    // (m, n): lambda_{m+1} <= n
    Class part_class = Class::All;
    int strip_length = 0;                       // the r of Br
    std::optional<long> max_weight;             // inclusive
    std::optional<long> exact_weight;

    bool admits(const Partition& lambda) const;
    bool is_finite() const;
    int effective_max_part() const;    // folds hook(0,n) into max_part; -1 = unbounded
    int effective_max_length() const;  // folds hook(m,0) into max_length; -1 = unbounded
};

// Emits every matching partition exactly once, in stream order. Deterministic.
class PartitionStream {
public:
    // Throws std::domain_error when the constraints admit infinitely many partitions.
    explicit PartitionStream(EnumConstraints c);

    std::optional<Partition> next();

private:
    void refill();

    EnumConstraints c_;
    long weight_ = 0;
    long weight_end_ = 0;
    std::vector<Partition> batch_;
    std::size_t pos_ = 0;
    bool done_ = false;
};

std::vector<Partition> enumerate_all(const EnumConstraints& c);

}  // namespace superchar
