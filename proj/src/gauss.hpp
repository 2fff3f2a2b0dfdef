#pragma once

#include <memory>
#include <vector>

#include "field.hpp"

namespace hgm {

// Full table of Gauss sums g(chi^k) for the fixed chi and psi_c, plus their
// inverses obtained from g(chi)g(chi^{-1}) = chi(-1) p (no general division).
class GaussTable {
public:
    GaussTable(std::shared_ptr<const PrimeField> F, Backend backend, long psi_c = 1);

    const PrimeField& F() const { return *field_; }
    std::shared_ptr<const PrimeField> field_ptr() const { return field_; }
    Backend backend() const { return backend_; }
    long psi_c() const { return psi_c_; }

    long idx(const Rat& alpha) const { return char_index(*field_, alpha); }
    const CycValue& g(long k) const;     // g(chi^k), k taken mod p-1
    const CycValue& ginv(long k) const;  // 1 / g(chi^k)
    CycValue gauss_sum(const Rat& alpha) const { return g(idx(alpha)); }

    CycValue chi(const Rat& alpha, long x) const { return char_value(*field_, alpha, x, backend_); }

    // (-1)^{r+s+1} * prod g(a_i) * g(sum b - sum a) / prod g(b_j)
    CycValue jacobi_motive(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

private:
    std::shared_ptr<const PrimeField> field_;
    Backend backend_;
    long psi_c_;
    std::vector<CycValue> G_, Ginv_;
};

} // namespace hgm
