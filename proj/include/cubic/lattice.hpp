#pragma once

// Valuation lattice view of a fractional ideal: the three rows of the HNF
// basis embedded into F_q((1/x))^3 via the infinite places. reduce(t) makes
// the basis orthogonal for the weighted size
//
//     s_t(alpha) = max_i (t_i - v_i(alpha)),
//
// after which { alpha in f : v_i(alpha) >= t_i for all i } is spanned by
// { x^e * row_j : 0 <= e <= -s_j }. This is the engine behind minimal
// elements, the distinguishedness test, and giant-step reduction.

#include "cubic/ideal.hpp"

namespace cubic {

class IdealLattice {
  public:
    IdealLattice(const CubicField& K, const FractionalIdeal& f) : K_(&K), den_(f.den) {
        dden_ = poly_deg(f.den);
        for (int j = 0; j < 3; ++j) rows_[j] = f.rows[j];
        prec_ = K.prec0;
        for (int j = 0; j < 3; ++j) embed_row(j);
    }

    // reduce w.r.t. weights t on the valuations of alpha = row/den
    void reduce(const std::array<i64, 3>& t) {
        t_ = t;
        u64 guard = 0;
        while (true) {
            check(++guard < 4096, errc::invariant, "lattice reduction budget exceeded");
            std::array<i64, 3> s;
            std::array<std::array<u64, 3>, 3> lv;  // lv[row][place]
            for (int j = 0; j < 3; ++j) {
                s[j] = svalue(j);
                for (int i = 0; i < 3; ++i) {
                    i64 level = t_[i] - dden_ - s[j];  // in numerator-order terms
                    lv[j][i] = emb_[j][i].at(level);
                }
            }
            std::array<u64, 3> lambda;
            if (!kernel_vector(lv, lambda)) return;  // leading vectors independent: reduced
            int r = -1;
            for (int j = 0; j < 3; ++j)
                if (lambda[j] && (r < 0 || s[j] > s[r] || (s[j] == s[r] && j > r))) r = j;
            // row_r := sum_j lambda_j x^(s_r - s_j) row_j ; strictly shrinks s_r
            Triple nrow{};
            std::array<Laurent, 3> nemb = {laurent_zero(), laurent_zero(), laurent_zero()};
            for (int j = 0; j < 3; ++j) {
                if (!lambda[j]) continue;
                i64 e = s[r] - s[j];
                for (int k = 0; k < 3; ++k) {
                    Poly part = poly_smul(K_->fq, rows_[j][k], lambda[j]);
                    nrow[k] = poly_add(K_->fq, nrow[k], poly_shift(part, (int)e));
                }
                for (int i = 0; i < 3; ++i)
                    nemb[i] = laurent_add(K_->fq, nemb[i],
                                          laurent_smul(K_->fq, laurent_shift(emb_[j][i], e), lambda[j]));
            }
            rows_[r] = std::move(nrow);
            emb_[r] = std::move(nemb);
            for (int i = 0; i < 3; ++i) {
                if (emb_[r][i].zero_to_horizon()) {  // cancellation ate the window: re-embed
                    embed_row(r);
                    break;
                }
            }
            check(svalue(r) < s[r], errc::invariant, "lattice reduction did not make progress");
        }
    }

    i64 svalue(int j) const {
        i64 s = std::numeric_limits<i64>::min();
        for (int i = 0; i < 3; ++i) {
            auto o = emb_[j][i].order();
            check(o.has_value(), errc::invariant, "row order unknown");
            s = std::max(s, t_[i] - (*o + dden_));
        }
        return s;
    }

    // dim of { alpha : v_i(alpha) >= t_i } after reduce(t)
    int dim_nonneg() const {
        int d = 0;
        for (int j = 0; j < 3; ++j) d += (int)std::max<i64>(0, -svalue(j) + 1);
        return d;
    }

    std::array<i64, 3> row_vals(int j) const {
        std::array<i64, 3> v;
        for (int i = 0; i < 3; ++i) v[i] = *emb_[j][i].order() + dden_;
        return v;
    }

    // x^e * row_j / den as a field function
    FieldFunction row_fn(int j, i64 e) const {
        return fn_make(*K_, poly_shift(rows_[j][0], (int)e), poly_shift(rows_[j][1], (int)e),
                       poly_shift(rows_[j][2], (int)e), den_);
    }

    // leading coefficient of the place-0 embedding of x^e row_j (shift-invariant)
    u64 leading_coeff0(int j) const { return emb_[j][0].leading(); }

    const Triple& row(int j) const { return rows_[j]; }
    const Poly& den() const { return den_; }

  private:
    void embed_row(int j) {
        for (int prec = prec_;; prec *= 2) {
            std::array<Laurent, 3> s;
            if (prec == K_->prec0) {
                s = detail::embed_triple(*K_, rows_[j], prec, K_->Y[0], K_->Ysq[0]);
            } else {
                auto emb = K_->embeddings_at(prec);
                s = detail::embed_triple(*K_, rows_[j], prec, emb[0], emb[1]);
            }
            bool ok = true;
            for (int i = 0; i < 3; ++i) {
                if (!s[i].order()) {
                    i64 ceiling = detail::triple_order_ceiling(*K_, rows_[j]);
                    check(s[i].horizon() <= ceiling, errc::invariant, "nonzero row embeds to zero");
                    ok = false;
                    break;
                }
            }
            if (ok) {
                emb_[j] = std::move(s);
                prec_ = std::max(prec_, prec);
                return;
            }
        }
    }

    // one nontrivial kernel vector of the 3x3 matrix over F_q, or false
    bool kernel_vector(std::array<std::array<u64, 3>, 3> m, std::array<u64, 3>& lambda) const {
        const Fq& F = K_->fq;
        // Gaussian elimination on rows (vectors to combine are the ROWS lv[j])
        // we need lambda with sum_j lambda_j * m[j][i] = 0 for all i
        int pivot_col[3] = {-1, -1, -1};
        std::array<std::array<u64, 3>, 3> id = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        int rank = 0;
        for (int j = 0; j < 3; ++j) {
            // reduce row j by previous pivot rows
            for (int r = 0; r < rank; ++r) {
                int pc = pivot_col[r];
                u64 f = m[j][pc];
                if (!f) continue;
                for (int c = 0; c < 3; ++c) m[j][c] = F.sub(m[j][c], F.mul(f, m[r][c]));
                for (int c = 0; c < 3; ++c) id[j][c] = F.sub(id[j][c], F.mul(f, id[r][c]));
            }
            int pc = -1;
            for (int c = 0; c < 3; ++c)
                if (m[j][c]) { pc = c; break; }
            if (pc < 0) {
                lambda = id[j];
                return true;
            }
            // normalize and move into pivot position `rank`
            u64 inv = F.inv(m[j][pc]);
            for (int c = 0; c < 3; ++c) m[j][c] = F.mul(m[j][c], inv);
            for (int c = 0; c < 3; ++c) id[j][c] = F.mul(id[j][c], inv);
            std::swap(m[j], m[rank]);
            std::swap(id[j], id[rank]);
            pivot_col[rank] = pc;
            ++rank;
        }
        return false;
    }

    const CubicField* K_;
    std::array<Triple, 3> rows_;
    Poly den_;
    i64 dden_ = 0;
    int prec_ = 0;
    std::array<std::array<Laurent, 3>, 3> emb_;
    std::array<i64, 3> t_ = {0, 0, 0};
};

}  // namespace cubic
