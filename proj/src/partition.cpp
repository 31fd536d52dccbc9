#include "superchar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::unchecked(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

int Partition::part(int i) const {
    if (i < 1)
        throw std::out_of_range("Partition::part: rows are 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]));
    for (int j = 1; j <= parts_[0]; ++j) {
        int count = 0;
        for (int row : parts_)
            if (row >= j) ++count;
        conj[j - 1] = count;
    }
    return unchecked(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

bool stream_less(const Partition& a, const Partition& b) {
    long wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts() > b.parts();
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return false;
    for (int i = 1; i < lambda.length(); ++i)
        if (lambda.part(i + 1) > mu.part(i)) return false;
    return true;
}

bool is_doubled(const Partition& lambda) {
    if (lambda.length() % 2 != 0) return false;
    for (int i = 1; i <= lambda.length(); i += 2)
        if (lambda.part(i) != lambda.part(i + 1)) return false;
    return true;
}

DoubledCore doubled_core(const Partition& lambda) {
    std::vector<int> core;
    for (int i = 2; i <= lambda.length(); i += 2) {
        core.push_back(lambda.part(i));
        core.push_back(lambda.part(i));
    }
    DoubledCore result;
    result.core = Partition::unchecked(std::move(core));
    result.strip = static_cast<int>(lambda.weight() - result.core.weight());
    return result;
}

bool in_class_br(const Partition& lambda, int r) {
    return doubled_core(lambda).strip == r;
}

int EnumConstraints::effective_max_part() const {
    int mp = max_part ? *max_part : -1;
    if (hook && hook->first == 0) {
        int h = hook->second;
        mp = (mp < 0) ? h : std::min(mp, h);
    }
    return mp;
}

int EnumConstraints::effective_max_length() const {
    int ml = max_length ? *max_length : -1;
    if (hook && hook->second == 0) {
        int h = hook->first;
        ml = (ml < 0) ? h : std::min(ml, h);
    }
    return ml;
}

bool EnumConstraints::admits(const Partition& lambda) const {
    if (max_part && lambda.part(1) > *max_part) return false;
    if (max_length && lambda.length() > *max_length) return false;
    if (hook && lambda.part(hook->first + 1) > hook->second) return false;
    switch (part_class) {
        case Class::All: break;
        case Class::B:
            if (!is_doubled(lambda)) return false;
            break;
        case Class::Br:
            if (!in_class_br(lambda, strip_length)) return false;
            break;
    }
    if (max_weight && lambda.weight() > *max_weight) return false;
    if (exact_weight && lambda.weight() != *exact_weight) return false;
    return true;
}

bool EnumConstraints::is_finite() const {
    if (exact_weight || max_weight) return true;
    int mp = effective_max_part();
    int ml = effective_max_length();
    if (mp == 0 || ml == 0) return true;
    return mp >= 0 && ml >= 0;
}

namespace {

// Partitions of `remaining` with bounded part size/count, descending lex order.
void generate(long remaining, int max_part, int rows_left, std::vector<int>& cur,
              const EnumConstraints& c, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition lambda = Partition::unchecked(cur);
        if (c.admits(lambda)) out.push_back(std::move(lambda));
        return;
    }
    if (rows_left == 0) return;
    int hi = static_cast<int>(std::min<long>(max_part, remaining));
    for (int next = hi; next >= 1; --next) {
        // remaining - next must still fit in the rows below
        if (static_cast<long>(rows_left - 1) * next < remaining - next) continue;
        cur.push_back(next);
        generate(remaining - next, next, rows_left - 1, cur, c, out);
        cur.pop_back();
    }
}

}  // namespace

PartitionStream::PartitionStream(EnumConstraints c) : c_(std::move(c)) {
    if (!c_.is_finite())
        throw std::domain_error(
            "enumerate: constraints admit infinitely many partitions; set a weight bound");
    int mp = c_.effective_max_part();
    int ml = c_.effective_max_length();
    long shape_bound = (mp >= 0 && ml >= 0) ? static_cast<long>(mp) * ml : -1;

    weight_end_ = shape_bound;
    if (c_.max_weight && (weight_end_ < 0 || *c_.max_weight < weight_end_))
        weight_end_ = *c_.max_weight;
    if (c_.exact_weight) {
        weight_ = *c_.exact_weight;
        if (weight_end_ < 0 || weight_ < weight_end_) weight_end_ = weight_;
        if (weight_ > weight_end_) done_ = true;
    }
    if (weight_end_ < 0) done_ = true;  // unreachable given is_finite()
}

void PartitionStream::refill() {
    while (!done_) {
        if (weight_ > weight_end_) {
            done_ = true;
            return;
        }
        batch_.clear();
        pos_ = 0;
        int mp = c_.effective_max_part();
        int ml = c_.effective_max_length();
        int max_part = (mp >= 0) ? mp : static_cast<int>(weight_);
        int rows = (ml >= 0) ? ml : static_cast<int>(weight_);
        std::vector<int> cur;
        generate(weight_, max_part, rows, cur, c_, batch_);
        ++weight_;
        if (!batch_.empty()) return;
    }
}

std::optional<Partition> PartitionStream::next() {
    if (pos_ >= batch_.size()) {
        refill();
        if (done_ && pos_ >= batch_.size()) return std::nullopt;
    }
    return batch_[pos_++];
}

std::vector<Partition> enumerate_all(const EnumConstraints& c) {
    PartitionStream stream(c);
    std::vector<Partition> out;
    while (auto lambda = stream.next()) out.push_back(std::move(*lambda));
    return out;
}

}  // namespace superchar
