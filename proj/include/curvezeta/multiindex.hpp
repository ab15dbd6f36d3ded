#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace curvezeta {

// A vector of d integer exponents/valuations. Entries are usually
// non-negative; the functional-equation checkers use negative entries too.
// operator<=> is lexicographic (container order); the product order of the
// valuation theory is exposed as leq()/geq().
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int d) : e_(static_cast<std::size_t>(d), 0) {}
    MultiIndex(std::initializer_list<int> init) : e_(init) {}
    explicit MultiIndex(std::vector<int> v) : e_(std::move(v)) {}

    static MultiIndex zero(int d) { return MultiIndex(d); }
    static MultiIndex constant(int d, int value);
    static MultiIndex unit(int d, int i); // e_i

    int dim() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }

    // ||n|| = n_1 + ... + n_d
    long long norm() const;

    // product order
    bool leq(const MultiIndex& other) const;
    bool geq(const MultiIndex& other) const { return other.leq(*this); }
    bool strictly_less(const MultiIndex& other) const; // n_i < m_i for all i
    bool is_nonnegative() const;

    MultiIndex operator+(const MultiIndex& o) const;
    MultiIndex operator-(const MultiIndex& o) const;
    MultiIndex operator+(int k) const; // add k to every entry
    MultiIndex min(const MultiIndex& o) const;
    MultiIndex max(const MultiIndex& o) const;
    MultiIndex clamped_nonnegative() const; // entrywise max(n_i, 0)

    auto operator<=>(const MultiIndex&) const = default;

    // "(a,b)" for messages
    std::string str() const;
    // "a,b" (JSON term key)
    std::string key() const;

private:
    std::vector<int> e_;
};

// Calls f on every n with lo <= n <= hi (product order), in lexicographic
// order. Does nothing if the box is empty.
void for_each_in_box(const MultiIndex& lo, const MultiIndex& hi,
                     const std::function<void(const MultiIndex&)>& f);

} // namespace curvezeta
