#include "reeslift/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace reeslift {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must weakly decrease");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: 1-based index");
    return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::transpose() const {
    std::vector<int> out;
    const int width = parts_.empty() ? 0 : parts_[0];
    out.reserve(static_cast<std::size_t>(width));
    for (int i = 1; i <= width; ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool dominates(const Partition& mu, const Partition& lambda) {
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i)
        if (mu.part(i) < lambda.part(i)) return false;
    return true;
}

DominantWeight::DominantWeight(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1])
            throw std::invalid_argument("DominantWeight: parts must weakly decrease");
}

namespace {

constexpr int kMaxPartitionSize = 12;

void recurse(int remaining, int max_parts, int max_part, std::vector<int>& stack,
             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (max_parts == 0) return;
    const int top = std::min(remaining, max_part);
    for (int p = top; p >= 1; --p) {
        stack.push_back(p);
        recurse(remaining - p, max_parts - 1, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int size, int max_parts, int max_part) {
    if (size < 0 || max_parts < 0) return {};
    if (size > kMaxPartitionSize)
        throw std::invalid_argument("partitions_of: enumeration capped at size 12");
    std::vector<Partition> out;
    std::vector<int> stack;
    recurse(size, max_parts, std::min(max_part, size), stack, out);
    return out;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    if (total < 0 || parts < 0) return {};
    std::vector<std::vector<int>> out;
    std::vector<int> stack(static_cast<std::size_t>(parts), 0);
    auto go = [&](auto&& self, int idx, int remaining) -> void {
        if (idx + 1 == parts || parts == 0) {
            if (parts == 0) {
                if (remaining == 0) out.push_back(stack);
                return;
            }
            stack[static_cast<std::size_t>(idx)] = remaining;
            out.push_back(stack);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            stack[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    go(go, 0, total);
    return out;
}

}  // namespace reeslift
