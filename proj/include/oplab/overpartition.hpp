#pragma once

#include <compare>
#include <string>
#include <vector>

namespace oplab {

// One part of an overpartition: a value with an optional overline mark.
struct Part {
    int value = 0;
    bool overlined = false;

    friend bool operator==(const Part&, const Part&) = default;
    friend auto operator<=>(const Part&, const Part&) = default;
};

// A partition in which, for each distinct value, at most one occurrence may
// be overlined.  Canonical storage: values nonincreasing, and among equal
// values the overlined copy sits last (it marks the final occurrence).
class Overpartition {
  public:
    Overpartition() = default;
    explicit Overpartition(std::vector<Part> parts);

    const std::vector<Part>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return static_cast<int>(parts_.size()); }

    friend bool operator==(const Overpartition&, const Overpartition&) = default;
    friend auto operator<=>(const Overpartition&, const Overpartition&) = default;

  private:
    std::vector<Part> parts_;
};

int weight(const Overpartition& op);
int overline_count(const Overpartition& op);

// Shorthand builder for tests and tools: values with a per-part overline flag.
Overpartition make_overpartition(std::initializer_list<std::pair<int, bool>> parts);

std::string to_string(const Overpartition& op);

// All overpartitions of weight n, each exactly once.  Order: base partitions
// in reverse-lexicographic order (largest first part first); for each base,
// overline masks counted with the mask bit of the largest distinct value
// varying fastest.
std::vector<Overpartition> enumerate_overpartitions(int n);

// Ordinary partitions of n, nonincreasing, reverse-lexicographic order.
std::vector<std::vector<int>> enumerate_partitions(int n);

// An overpartition in which a single overlined part 0 may also appear.
class Superpartition {
  public:
    Superpartition() = default;
    explicit Superpartition(std::vector<Part> parts);

    const std::vector<Part>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Superpartition&, const Superpartition&) = default;

  private:
    std::vector<Part> parts_;
};

int weight(const Superpartition& sp);
std::vector<Superpartition> enumerate_superpartitions(int n);

}  // namespace oplab
