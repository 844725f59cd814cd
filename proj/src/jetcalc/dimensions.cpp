#include "vessiot/dimensions.hpp"

#include "vessiot/errors.hpp"

namespace vessiot {

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long dim_symmetric(int q, int n) { return q < 0 ? 0 : binomial(q + n - 1, n - 1); }
long dim_symmetric_tangent(int q, int n) { return n * dim_symmetric(q, n); }
long dim_exterior(int k, int n) { return binomial(n, k); }

DimensionTable dim_table(int n, std::optional<long> f1, int max_q) {
    if (n < 1) throw PreconditionViolation("dimension table needs n >= 1");
    if (max_q < 3) max_q = 3;
    DimensionTable t;
    t.n = n;
    t.dim_f1 = f1.value_or(static_cast<long>(n) * (n + 1) / 2);
    if (t.dim_f1 < 0) throw PreconditionViolation("dim F1 must be non-negative");
    auto& e = t.entries;
    for (int q = 0; q <= max_q; ++q) {
        e["dim_S" + std::to_string(q) + "T*"] = dim_symmetric(q, n);
        e["dim_S" + std::to_string(q) + "T*xT"] = dim_symmetric_tangent(q, n);
    }
    for (int k = 0; k <= n; ++k) e["dim_L" + std::to_string(k) + "T*"] = dim_exterior(k, n);
    e["dim_F1"] = t.dim_f1;
    e["dim_S2T*xF1"] = dim_symmetric(2, n) * t.dim_f1;
    e["dim_F2"] = e["dim_S2T*xF1"] - dim_symmetric_tangent(3, n);
    e["dim_T*xS2T*xT"] = static_cast<long>(n) * dim_symmetric_tangent(2, n);
    e["dim_F1_affine"] = e["dim_T*xS2T*xT"] - dim_symmetric_tangent(3, n);
    return t;
}

}  // namespace vessiot
