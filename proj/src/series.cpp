#include "qfock/series.hpp"

#include <algorithm>

namespace qfock {

Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i)
        for (int j = 0; i + j <= r.order() && j <= b.order(); ++j)
            if (i <= a.order()) r[i + j] += a[i] * b[j];
    return r;
}

Series operator/(const Series& a, const Series& b) {
    if (b[0].zero()) throw std::domain_error("series division by w-multiple");
    Series r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) {
        RatFn acc = a[k];
        for (int j = 0; j < k; ++j) acc -= r[j] * b[k - j];
        r[k] = acc / b[0];
    }
    return r;
}

Series series_exp(const Series& s) {
    if (!s[0].zero()) throw std::domain_error("series_exp needs zero constant term");
    Series r(s.order());
    r[0] = RatFn(1);
    // k r_k = sum_{j=1..k} j s_j r_{k-j}
    for (int k = 1; k <= s.order(); ++k) {
        RatFn acc;
        for (int j = 1; j <= k; ++j) acc += RatFn(Rat(j)) * s[j] * r[k - j];
        r[k] = acc / RatFn(Rat(k));
    }
    return r;
}

Series series_log(const Series& s) {
    if (s[0] != RatFn(1)) throw std::domain_error("series_log needs constant term 1");
    Series r(s.order());
    // k s_k = sum_{j=1..k} j r_j s_{k-j}  =>  solve for r_k (s_0 = 1)
    for (int k = 1; k <= s.order(); ++k) {
        RatFn acc = RatFn(Rat(k)) * s[k];
        for (int j = 1; j < k; ++j) acc -= RatFn(Rat(j)) * r[j] * s[k - j];
        r[k] = acc / RatFn(Rat(k));
    }
    return r;
}

Series series_from_factors(const std::vector<std::pair<int, RatFn>>& factors, int order) {
    Series r = Series::one(order);
    for (const auto& [sign, c] : factors) {
        Series f(order);
        if (sign == +1) {
            RatFn p(1);
            for (int k = 0; k <= order; ++k) {
                f[k] = p;
                p = p * c;
            }
        } else if (sign == -1) {
            f[0] = RatFn(1);
            if (order >= 1) f[1] = -c;
        } else {
            throw std::domain_error("factor sign must be +1 or -1");
        }
        r = r * f;
    }
    return r;
}

}  // namespace qfock
