#ifndef NONACYCLE_ONE_BASED_HPP
#define NONACYCLE_ONE_BASED_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace nonacycle {

// Vector addressed by the inclusive index range [first, last], so that code
// can follow 1-based subscripts verbatim. An empty range is allowed.
template <typename T>
class one_based {
public:
    one_based() = default;
    one_based(int first, int last)
        : first_(first),
          values_(last >= first ? static_cast<std::size_t>(last - first + 1) : 0) {}

    int first() const { return first_; }
    int last() const { return first_ + static_cast<int>(values_.size()) - 1; }
    int size() const { return static_cast<int>(values_.size()); }
    bool in_range(int i) const { return i >= first() && i <= last(); }

    T& operator()(int i) { return values_[checked(i)]; }
    const T& operator()(int i) const { return values_[checked(i)]; }

    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }

    friend bool operator==(const one_based& x, const one_based& y) {
        return x.first_ == y.first_ && x.values_ == y.values_;
    }

private:
    std::size_t checked(int i) const {
        if (!in_range(i))
            throw std::out_of_range("index " + std::to_string(i) + " outside [" +
                                    std::to_string(first()) + ", " + std::to_string(last()) + "]");
        return static_cast<std::size_t>(i - first_);
    }

    int first_ = 1;
    std::vector<T> values_;
};

} // namespace nonacycle

#endif
