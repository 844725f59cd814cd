#pragma once

#include <map>
#include <optional>
#include <string>

namespace vessiot {

[[nodiscard]] long binomial(long n, long k);

/// dim S_q T* = C(q+n-1, n-1).
[[nodiscard]] long dim_symmetric(int q, int n);
/// dim S_q T* (x) T = n C(q+n-1, n-1).
[[nodiscard]] long dim_symmetric_tangent(int q, int n);
/// dim Lambda^k T* = C(n, k).
[[nodiscard]] long dim_exterior(int k, int n);

/// Named bundle dimensions for the second-order compatibility diagram.
/// Keys: dim_S<q>T*, dim_S<q>T*xT (q = 0..max_q), dim_L<k>T* (k = 0..n),
/// dim_F1, dim_S2T*xF1, dim_S3T*xT, dim_F2, dim_T*xS2T*xT, dim_F1_affine.
struct DimensionTable {
    int n = 0;
    long dim_f1 = 0;
    std::map<std::string, long> entries;

    [[nodiscard]] long at(const std::string& key) const { return entries.at(key); }
    /// dim(Lambda^2 T* (x) g_1) for a given dim g_1.
    [[nodiscard]] long exterior2_times(long dim_g1) const { return dim_exterior(2, n) * dim_g1; }
};

/// `f1` defaults to n(n+1)/2, the size of a first-order Medolaghi system on
/// a three-component object when n = 2.
[[nodiscard]] DimensionTable dim_table(int n, std::optional<long> f1 = std::nullopt, int max_q = 4);

}  // namespace vessiot
