/*
   Copyright 2026 The fourcirc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FOURCIRC_FOUR_CIRCULANT_HPP
#define FOURCIRC_FOUR_CIRCULANT_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "galois.hpp"
#include "matrix.hpp"
#include "numtheory.hpp"
#include "parallel.hpp"
#include "polyring.hpp"

namespace fourcirc {

/// Square matrix whose row i is row i-1 cyclically shifted right by one;
/// entry (i, j) is first_row[(j - i) mod n].
class Circulant {
   public:
    explicit Circulant(RingElem first_row) : first_row_(std::move(first_row)) {}

    std::size_t n() const noexcept { return first_row_.n(); }
    const RingElem& first_row() const noexcept { return first_row_; }

    Matrix expand() const {
        const std::size_t n = first_row_.n();
        Matrix m(first_row_.field(), n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row_[(j + n - i) % n];
        return m;
    }

   private:
    RingElem first_row_;
};

/// A vector of length 4n split into the blocks (c, d, e, f).
struct Codeword {
    RingElem c, d, e, f;

    std::vector<FieldElem> flatten() const {
        std::vector<FieldElem> out;
        out.reserve(4 * c.n());
        for (const RingElem* blk : {&c, &d, &e, &f}) out.insert(out.end(), blk->coeffs().begin(), blk->coeffs().end());
        return out;
    }

    std::size_t weight() const noexcept { return c.weight() + d.weight() + e.weight() + f.weight(); }

    static Codeword from_vector(const FieldPtr& field, std::size_t n, std::span<const FieldElem> v) {
        if (v.size() != 4 * n) throw ValidationError("codeword length must be 4n");
        auto block = [&](std::size_t i) {
            return RingElem(field, std::vector<FieldElem>(v.begin() + i * n, v.begin() + (i + 1) * n));
        };
        return {block(0), block(1), block(2), block(3)};
    }

    static Codeword zero(const FieldPtr& field, std::size_t n) {
        return {RingElem(field, n), RingElem(field, n), RingElem(field, n), RingElem(field, n)};
    }

    friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Standard (Euclidean) inner product of two equal-length vectors.
inline FieldElem inner_product(const GaloisField& F, std::span<const FieldElem> u, std::span<const FieldElem> v) {
    if (u.size() != v.size()) throw ValidationError("inner product of vectors with different lengths");
    FieldElem acc{};
    for (std::size_t i = 0; i < u.size(); ++i) acc = F.add(acc, F.mul(u[i], v[i]));
    return acc;
}

struct DistanceOptions {
    std::uint64_t cap = kDefaultWorkloadCap;
    unsigned workers = 1;
};

struct DistanceResult {
    std::size_t distance = 0;
    /// c.index() * q^n + d.index() of the witness message.
    std::uint64_t message_index = 0;
    Codeword witness;
};

/// The [4n, 2n] code generated by [I 0 A B; 0 I -B^T A^T] with A, B the
/// circulants of a(x), b(x). As an R(n, F_q)-module it is generated by
/// (1, 0, a, b) and (0, 1, -b', a').
class FourCirculantCode {
   public:
    FourCirculantCode(RingElem a, RingElem b) : a_(std::move(a)), b_(std::move(b)) {
        require_same_field(a_.field(), b_.field());
        if (a_.n() != b_.n()) throw ValidationError("a and b must have the same length n");
    }

    const FieldPtr& field() const noexcept { return a_.field(); }
    std::size_t n() const noexcept { return a_.n(); }
    const RingElem& a() const noexcept { return a_; }
    const RingElem& b() const noexcept { return b_; }

    Matrix generator_matrix() const {
        const std::size_t n = this->n();
        Matrix g(field(), 2 * n, 4 * n);
        const Matrix id = Matrix::identity(field(), n);
        g.set_block(0, 0, id);
        g.set_block(0, 2 * n, Circulant(a_).expand());
        g.set_block(0, 3 * n, Circulant(b_).expand());
        g.set_block(n, n, id);
        // -B^T and A^T are the circulants of -b' and a'
        g.set_block(n, 2 * n, Circulant(-reciprocal(b_)).expand());
        g.set_block(n, 3 * n, Circulant(reciprocal(a_)).expand());
        return g;
    }

    /// c(1, 0, a, b) + d(0, 1, -b', a') = (c, d, ca - db', cb + da')
    Codeword encode(const RingElem& c, const RingElem& d) const {
        check_block(c);
        check_block(d);
        return {c, d, c * a_ - d * reciprocal(b_), c * b_ + d * reciprocal(a_)};
    }

    /// 1 + a a' + b b' in R(n, F_q).
    RingElem criterion_residue() const {
        return RingElem::one(field(), n()) + a_ * reciprocal(a_) + b_ * reciprocal(b_);
    }

    /// (x^n - 1) | 1 + a(x)a(x^{n-1}) + b(x)b(x^{n-1})
    bool is_self_dual_poly() const { return criterion_residue().is_zero(); }

    /// AA^T + BB^T + I = 0 and the full Gram matrix GG^T vanishes.
    bool is_self_dual_matrix() const {
        const Matrix A = Circulant(a_).expand(), B = Circulant(b_).expand();
        const Matrix core = A * A.transpose() + B * B.transpose() + Matrix::identity(field(), n());
        if (!core.is_zero()) return false;
        const Matrix g = generator_matrix();
        return (g * g.transpose()).is_zero();
    }

    /// gcd(1 + a a' + b b', x^n - 1) = 1
    bool is_lcd() const { return is_unit(criterion_residue()); }

    /// The first two blocks of a codeword are its message, so u is in the
    /// code iff e = ca - db' and f = cb + da'.
    bool contains(const Codeword& u) const {
        check_block(u.c);
        check_block(u.d);
        check_block(u.e);
        check_block(u.f);
        return u.e == u.c * a_ - u.d * reciprocal(b_) && u.f == u.c * b_ + u.d * reciprocal(a_);
    }

    /// Exact minimum distance by scanning all q^{2n} messages. Ties go to the
    /// least message index; the answer does not depend on the worker count.
    DistanceResult min_distance(const DistanceOptions& opts = {}) const {
        const auto& F = *field();
        const std::size_t n = this->n();
        const std::uint64_t count = checked_pow(F.q(), n);
        if (count > std::numeric_limits<std::uint32_t>::max() || count * count > opts.cap)
            throw WorkloadError("minimum distance sweep over q^(2n) messages exceeds the cap",
                                count > std::numeric_limits<std::uint32_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                                                   : count * count,
                                opts.cap);

        // tails of (c, 0, ca, cb) and (0, d, -db', da'), flattened per message half
        const std::size_t width = 2 * n;
        std::vector<std::uint32_t> tail_c(count * width), tail_d(count * width);
        std::vector<std::uint32_t> wt(count);
        const RingElem a_rec = reciprocal(a_), b_rec_neg = -reciprocal(b_);
        for (std::uint64_t i = 0; i < count; ++i) {
            const RingElem r = RingElem::from_index(field(), n, i);
            wt[i] = static_cast<std::uint32_t>(r.weight());
            const RingElem blocks[4] = {r * a_, r * b_, r * b_rec_neg, r * a_rec};
            for (std::size_t j = 0; j < n; ++j) {
                tail_c[i * width + j] = blocks[0][j].value;
                tail_c[i * width + n + j] = blocks[1][j].value;
                tail_d[i * width + j] = blocks[2][j].value;
                tail_d[i * width + n + j] = blocks[3][j].value;
            }
        }

        struct Best {
            std::size_t weight = std::numeric_limits<std::size_t>::max();
            std::uint64_t index = 0;
        };
        std::vector<Best> partial(std::max(1u, opts.workers));
        parallel_chunks(count, opts.workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned chunk) {
            Best best;
            for (std::uint64_t ci = lo; ci < hi; ++ci) {
                const std::uint32_t* tc = &tail_c[ci * width];
                for (std::uint64_t di = (ci == 0 ? 1 : 0); di < count; ++di) {
                    std::size_t w = wt[ci] + wt[di];
                    if (w >= best.weight) continue;
                    const std::uint32_t* td = &tail_d[di * width];
                    for (std::size_t j = 0; j < width && w < best.weight; ++j)
                        w += F.add(FieldElem{tc[j]}, FieldElem{td[j]}).value != 0;
                    if (w < best.weight) best = {w, ci * count + di};
                }
            }
            partial[chunk] = best;
        });

        Best best;
        for (const auto& b : partial)
            if (b.weight < best.weight || (b.weight == best.weight && b.index < best.index)) best = b;
        const RingElem c = RingElem::from_index(field(), n, best.index / count);
        const RingElem d = RingElem::from_index(field(), n, best.index % count);
        return {best.weight, best.index, encode(c, d)};
    }

   private:
    RingElem a_;
    RingElem b_;

    void check_block(const RingElem& r) const {
        require_same_field(field(), r.field());
        if (r.n() != n()) throw ValidationError("block length differs from the code's n");
    }
};

}  // namespace fourcirc

#endif
