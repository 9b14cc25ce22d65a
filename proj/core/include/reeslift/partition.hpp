#pragma once

#include <string>
#include <vector>

#include "reeslift/rational.hpp"

namespace reeslift {

// Partition: weakly decreasing nonnegative parts, trailing zeros stripped,
// so equality is equality of Young diagrams.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;               // |lambda|
    int part(int i) const;          // 1-based; 0 beyond length()

    Partition transpose() const;    // lambda'_i = #{j : lambda_j >= i}

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

// Componentwise order after zero-padding (not the majorization order).
bool dominates(const Partition& mu, const Partition& lambda);

// Weakly decreasing integer vector of a fixed length; parts may be negative.
class DominantWeight {
  public:
    explicit DominantWeight(std::vector<int> parts);
    DominantWeight(std::initializer_list<int> parts)
        : DominantWeight(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }

  private:
    std::vector<int> parts_;
};

// All partitions of `size` into at most max_parts parts, each part at most
// max_part; lexicographic recursion with a hard cap size <= 12.
std::vector<Partition> partitions_of(int size, int max_parts, int max_part);

// All vectors of `parts` nonnegative integers summing to `total`,
// lexicographically (first slot largest first).
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace reeslift
