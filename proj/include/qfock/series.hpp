#pragma once

#include <utility>
#include <vector>

#include "qfock/ratfn.hpp"

namespace qfock {

// Truncated power series in a formal variable w with RatFn coefficients.
// The order is the truncation degree; coeffs has order()+1 entries.
// Arithmetic between two series truncates to the smaller order.
class Series {
public:
    explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::domain_error("negative series order");
    }
    static Series one(int order) {
        Series s(order);
        s.c_[0] = RatFn(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const RatFn& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    RatFn& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    // Requires b[0] != 0.
    friend Series operator/(const Series& a, const Series& b);

    bool operator==(const Series& o) const { return c_ == o.c_; }
    bool operator!=(const Series& o) const { return c_ != o.c_; }

private:
    std::vector<RatFn> c_;
};

// exp of a series with zero constant term.
Series series_exp(const Series& s);
// log of a series with constant term 1.
Series series_log(const Series& s);

// Truncated product of factors (1 - c w)^(-sign): sign +1 contributes the
// geometric factor 1/(1 - c w), sign -1 the plain factor (1 - c w).
Series series_from_factors(const std::vector<std::pair<int, RatFn>>& factors, int order);

}  // namespace qfock
