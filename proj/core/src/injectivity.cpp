#include "icdof/injectivity.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace icdof {

namespace {

// (2N-1)^n, or nullopt when it exceeds cap.
std::optional<std::uint64_t> pow_checked(std::uint64_t base, size_t n, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (size_t i = 0; i < n; ++i) {
        if (r > cap / base) return std::nullopt;
        r *= base;
    }
    return r;
}

// Enumerates x in [-(N-1), N-1]^n in lexicographic order (each coordinate
// ascending), calling visit(x, sum) at every leaf with sum = sum_i x_i * w_i.
template <typename T, typename Visit>
void enumerate_box(const std::vector<T>& w, long N, Visit&& visit) {
    const long lo = -(N - 1);
    std::vector<int> x(w.size(), 0);
    T sum{};
    auto rec = [&](auto&& self, size_t pos) -> bool {
        if (pos == w.size()) return visit(x, sum);
        T saved = sum;
        for (long v = lo; v <= N - 1; ++v) {
            x[pos] = static_cast<int>(v);
            sum = saved;
            if (v > 0)
                for (long t = 0; t < v; ++t) sum = sum + w[pos];
            else if (v < 0)
                for (long t = 0; t < -v; ++t) sum = sum - w[pos];
            if (!self(self, pos + 1)) return false;
        }
        sum = saved;
        x[pos] = 0;
        return true;
    };
    rec(rec, 0);
}

// Same, but only over the subtree with a fixed first coordinate.
template <typename T, typename Visit>
void enumerate_box_branch(const std::vector<T>& w, long N, long first, Visit&& visit) {
    std::vector<T> rest(w.begin() + 1, w.end());
    T base{};
    if (first > 0)
        for (long t = 0; t < first; ++t) base = base + w[0];
    else if (first < 0)
        for (long t = 0; t < -first; ++t) base = base - w[0];
    if (rest.empty()) {
        std::vector<int> x{static_cast<int>(first)};
        visit(x, base);
        return;
    }
    enumerate_box(rest, N, [&](const std::vector<int>& xr, const T& s) {
        std::vector<int> x;
        x.reserve(xr.size() + 1);
        x.push_back(static_cast<int>(first));
        x.insert(x.end(), xr.begin(), xr.end());
        return visit(x, base + s);
    });
}

// Meet-in-the-middle: find the lexicographically first (a | b) with
// sum_i a_i wa_i + sum_i b_i wb_i = 0 and b_valid(b), a, b in the
// [-(N-1), N-1] box.  Returns nullopt when no such pair exists.
template <typename T, typename BValid>
std::optional<std::pair<std::vector<int>, std::vector<int>>> mitm_search(
    const std::vector<T>& wa, const std::vector<T>& wb, long N, int workers,
    BValid&& b_valid) {
    // Index every valid b half by its partial sum, in lex order.
    std::vector<std::vector<int>> b_list;
    std::map<T, std::vector<std::uint32_t>> index;
    enumerate_box(wb, N, [&](const std::vector<int>& b, const T& s) {
        if (b_valid(b)) {
            index[s].push_back(static_cast<std::uint32_t>(b_list.size()));
            b_list.push_back(b);
        }
        return true;
    });
    if (index.empty()) return std::nullopt;

    using Hit = std::pair<std::vector<int>, std::vector<int>>;
    const long lo = -(N - 1);
    const long branches = 2 * N - 1;
    workers = std::max(1, workers);
    std::vector<std::optional<Hit>> hits(static_cast<size_t>(workers));

    auto scan_branch = [&](long first, std::optional<Hit>& out) {
        enumerate_box_branch(wa, N, lo + first, [&](const std::vector<int>& a, const T& s) {
            auto it = index.find(T{} - s);
            if (it != index.end()) {
                out = Hit{a, b_list[it->second.front()]};
                return false;  // lex-first within this branch
            }
            return true;
        });
    };

    if (workers == 1) {
        std::optional<Hit> hit;
        for (long br = 0; br < branches && !hit; ++br) scan_branch(br, hit);
        return hit;
    }
    std::vector<std::thread> pool;
    for (int wkr = 0; wkr < workers; ++wkr) {
        pool.emplace_back([&, wkr] {
            for (long br = wkr; br < branches && !hits[wkr]; br += workers)
                scan_branch(br, hits[wkr]);
        });
    }
    for (auto& t : pool) t.join();
    // Reduce to the global lexicographic minimum over (a | b).
    std::optional<Hit> best;
    for (const auto& h : hits) {
        if (!h) continue;
        if (!best || h->first < best->first ||
            (h->first == best->first && h->second < best->second))
            best = h;
    }
    return best;
}

void sign_split(const std::vector<int>& v, std::vector<int>& pos, std::vector<int>& neg) {
    pos.resize(v.size());
    neg.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        pos[i] = std::max(v[i], 0);
        neg[i] = std::max(-v[i], 0);
    }
}

Rat dot(const std::vector<int>& c, const std::vector<Rat>& f) {
    Rat s(0);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) s += Rat(c[i]) * f[i];
    return s;
}

UniPoly dot_poly(const std::vector<int>& c, const std::vector<UniPoly>& f) {
    UniPoly s;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) s = s + f[i].scaled(Int(c[i]));
    return s;
}

CollisionWitness make_witness(int user, long N, int d, const std::vector<int>& a,
                              const std::vector<int>& b) {
    CollisionWitness w;
    w.user = user;
    w.N = N;
    w.d = d;
    w.a = a;
    w.b = b;
    // Any box-bounded difference vector splits into a difference of two
    // {0,...,N-1} vectors: a = w1 - w1t, b = w2t - w2.
    sign_split(a, w.w1, w.w1t);
    sign_split(b, w.w2t, w.w2);
    return w;
}

Int common_denominator(const std::vector<Rat>& fvals) {
    Int D(1);
    for (const auto& f : fvals) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), f.get_den().get_mpz_t());
    return D;
}

}  // namespace

CheckOutcome check_map_injectivity(const std::vector<Rat>& fvals, const Rat& g, int user,
                                   long N, int d, const SearchOptions& opts) {
    if (N < 2) throw std::invalid_argument("injectivity check requires N >= 2");
    if (g == 0) throw std::invalid_argument("diagonal entry must be nonzero");
    CheckOutcome out;
    if (!pow_checked(static_cast<std::uint64_t>(2 * N - 1), fvals.size(), opts.half_cap)) {
        out.kind = CheckOutcome::Kind::Unknown;
        out.unknown_reason = "search half exceeds cap; verdict unknown at this level";
        return out;
    }
    // Clear denominators: a.f = g*(b.f) with g = p/q becomes
    // sum_i a_i (q D f_i) - sum_i b_i (p D f_i) = 0 over integers.
    const Int D = common_denominator(fvals);
    const Int& p = g.get_num();
    const Int& q = g.get_den();
    std::vector<Int> F(fvals.size());
    for (size_t i = 0; i < fvals.size(); ++i) {
        Rat s = fvals[i] * Rat(D);
        F[i] = s.get_num();  // denominator is 1 by construction
    }
    std::vector<Int> wa(F.size()), wb(F.size());
    for (size_t i = 0; i < F.size(); ++i) {
        wa[i] = q * F[i];
        wb[i] = -p * F[i];
    }
    auto b_valid = [&](const std::vector<int>& b) {
        Int s(0);
        for (size_t i = 0; i < b.size(); ++i)
            if (b[i] != 0) s += b[i] * F[i];
        return s != 0;
    };
    auto hit = mitm_search(wa, wb, N, opts.workers, b_valid);
    if (hit) {
        CollisionWitness w = make_witness(user, N, d, hit->first, hit->second);
        w.af = dot(w.a, fvals);
        w.bf = dot(w.b, fvals);
        w.lhs = dot(w.w1, fvals) + g * dot(w.w2, fvals);
        w.rhs = dot(w.w1t, fvals) + g * dot(w.w2t, fvals);
        out.kind = CheckOutcome::Kind::Witness;
        out.witness = std::move(w);
        return out;
    }
    TruncationCertificate cert;
    cert.user = user;
    cert.N = N;
    cert.d = d;
    Int box;
    mpz_ui_pow_ui(box.get_mpz_t(), static_cast<unsigned long>(2 * N - 1),
                  static_cast<unsigned long>(2 * fvals.size()));
    cert.search_space = box;
    out.kind = CheckOutcome::Kind::Certificate;
    out.certificate = std::move(cert);
    return out;
}

CheckOutcome check_map_injectivity_poly(const std::vector<UniPoly>& fvals,
                                        const UniPoly& g_num, const UniPoly& g_den, int user,
                                        long N, int d, const SearchOptions& opts) {
    if (N < 2) throw std::invalid_argument("injectivity check requires N >= 2");
    if (g_num.is_zero() || g_den.is_zero())
        throw std::invalid_argument("diagonal polynomial ratio must be nonzero");
    CheckOutcome out;
    if (!pow_checked(static_cast<std::uint64_t>(2 * N - 1), fvals.size(), opts.half_cap)) {
        out.kind = CheckOutcome::Kind::Unknown;
        out.unknown_reason = "search half exceeds cap; verdict unknown at this level";
        return out;
    }
    // a.f = (g_num/g_den)*(b.f) as polynomials:
    // sum_i a_i (g_den f_i) - sum_i b_i (g_num f_i) = 0.
    std::vector<UniPoly> wa(fvals.size()), wb(fvals.size());
    for (size_t i = 0; i < fvals.size(); ++i) {
        wa[i] = g_den * fvals[i];
        wb[i] = -(g_num * fvals[i]);
    }
    auto b_valid = [&](const std::vector<int>& b) { return !dot_poly(b, fvals).is_zero(); };
    auto hit = mitm_search(wa, wb, N, opts.workers, b_valid);
    if (hit) {
        CollisionWitness w = make_witness(user, N, d, hit->first, hit->second);
        w.symbolic = true;
        w.af_poly = dot_poly(w.a, fvals);
        w.bf_poly = dot_poly(w.b, fvals);
        out.kind = CheckOutcome::Kind::Witness;
        out.witness = std::move(w);
        return out;
    }
    TruncationCertificate cert;
    cert.user = user;
    cert.N = N;
    cert.d = d;
    Int box;
    mpz_ui_pow_ui(box.get_mpz_t(), static_cast<unsigned long>(2 * N - 1),
                  static_cast<unsigned long>(2 * fvals.size()));
    cert.search_space = box;
    out.kind = CheckOutcome::Kind::Certificate;
    out.certificate = std::move(cert);
    return out;
}

CheckOutcome check_user(const ChannelMatrix& m, int user, long N, int d,
                        const SearchOptions& opts) {
    if (user < 0 || user >= m.K()) throw std::invalid_argument("user index out of range");
    if (!is_fully_connected(m))
        throw std::invalid_argument("injectivity check requires a fully connected matrix");
    MonomialBasis basis = enumerate_monomials(m.K(), d, opts.oracle_cap);
    std::vector<Rat> fvals = eval_basis(basis, m.offdiag());
    return check_map_injectivity(fvals, m.at(user, user), user, N, d, opts);
}

CheckOutcome check_user(const CanonicalForm3& cf, int user, long N, int d, bool symbolic,
                        const SearchOptions& opts) {
    if (user < 0 || user >= 3) throw std::invalid_argument("user index out of range");
    if (!symbolic) return check_user(cf.reconstruct(), user, N, d, opts);
    MonomialBasis basis = enumerate_monomials(3, d, opts.oracle_cap);
    std::vector<UniPoly> fvals = eval_basis_poly(basis, cf.offdiag_symbolic());
    const Rat& g = cf.g[user];
    return check_map_injectivity_poly(fvals, UniPoly::constant(g.get_num()),
                                      UniPoly::constant(g.get_den()), user, N, d, opts);
}

ConditionReport check_condition(const ChannelMatrix& m, long N, int d,
                                const SearchOptions& opts) {
    ConditionReport rep;
    rep.N = N;
    rep.d = d;
    rep.holds_at_level = true;
    for (int i = 0; i < m.K(); ++i) {
        rep.users.push_back(check_user(m, i, N, d, opts));
        if (rep.users.back().is_witness()) {
            rep.holds_at_level = false;
            break;  // first witness short-circuits
        }
        if (!rep.users.back().is_certificate()) rep.holds_at_level = false;
    }
    return rep;
}

CheckOutcome brute_force_check_values(const std::vector<Rat>& fvals, const Rat& g, int user,
                                      long N, int d, const SearchOptions& opts) {
    if (N < 2) throw std::invalid_argument("injectivity check requires N >= 2");
    CheckOutcome out;
    // Explicit W_{N,d} with lex-least coefficient representatives.
    std::map<Rat, std::vector<int>> wmap;
    if (!pow_checked(static_cast<std::uint64_t>(N), fvals.size(), opts.oracle_cap)) {
        out.kind = CheckOutcome::Kind::Unknown;
        out.unknown_reason = "W-set enumeration exceeds oracle cap";
        return out;
    }
    {
        std::vector<int> coeff(fvals.size(), 0);
        Rat sum(0);
        auto rec = [&](auto&& self, size_t pos) -> void {
            if (pos == fvals.size()) {
                wmap.emplace(sum, coeff);
                return;
            }
            Rat saved = sum;
            for (long a = 0; a < N; ++a) {
                coeff[pos] = static_cast<int>(a);
                self(self, pos + 1);
                sum += fvals[pos];
            }
            sum = saved;
            coeff[pos] = 0;
        };
        rec(rec, 0);
    }
    std::vector<Rat> w;
    w.reserve(wmap.size());
    for (const auto& [v, rep] : wmap) w.push_back(v);
    const size_t M = w.size();
    if (opts.oracle_cap / M < M) {
        out.kind = CheckOutcome::Kind::Unknown;
        out.unknown_reason = "pair enumeration exceeds oracle cap";
        return out;
    }

    // Scale to integers: the map value w_i + g*w_j times q*D is
    // q*D*w_i + p*D*w_j with D the common denominator of W.
    const Int& p = g.get_num();
    const Int& q = g.get_den();
    Int D = common_denominator(w);
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), q.get_mpz_t());
    std::vector<Int> wq(M), wp(M);
    Int max_q(0), max_p(0);
    for (size_t i = 0; i < M; ++i) {
        wq[i] = Rat(w[i] * Rat(q * D)).get_num();
        wp[i] = Rat(w[i] * Rat(p * D)).get_num();
        if (abs(wq[i]) > max_q) max_q = abs(wq[i]);
        if (abs(wp[i]) > max_p) max_p = abs(wp[i]);
    }
    Int max_abs = max_q + max_p;

    std::optional<std::pair<size_t, size_t>> first, second;
    if (max_abs.fits_slong_p() && max_abs.get_si() < (1L << 61)) {
        // int64 fast path
        std::vector<long> iq(M), ip(M);
        for (size_t i = 0; i < M; ++i) {
            iq[i] = wq[i].get_si();
            ip[i] = wp[i].get_si();
        }
        std::unordered_map<long, std::uint64_t> seen;
        seen.reserve(M * M);
        for (size_t i = 0; i < M && !second; ++i)
            for (size_t j = 0; j < M; ++j) {
                long v = iq[i] + ip[j];
                auto [it, inserted] = seen.emplace(v, (static_cast<std::uint64_t>(i) << 32) | j);
                if (!inserted) {
                    first = {static_cast<size_t>(it->second >> 32),
                             static_cast<size_t>(it->second & 0xffffffffu)};
                    second = {i, j};
                    break;
                }
            }
    } else {
        std::map<Int, std::pair<size_t, size_t>> seen;
        for (size_t i = 0; i < M && !second; ++i)
            for (size_t j = 0; j < M; ++j) {
                Int v = wq[i] + wp[j];
                auto [it, inserted] = seen.emplace(v, std::make_pair(i, j));
                if (!inserted) {
                    first = it->second;
                    second = {i, j};
                    break;
                }
            }
    }

    if (second) {
        // Colliding pairs always differ in both coordinates: equal map values
        // with equal w1 force equal w2 (g != 0) and vice versa.
        auto [i1, j1] = *first;
        auto [i2, j2] = *second;
        const std::vector<int>& r1 = wmap.at(w[i1]);
        const std::vector<int>& r2 = wmap.at(w[j1]);
        const std::vector<int>& r1t = wmap.at(w[i2]);
        const std::vector<int>& r2t = wmap.at(w[j2]);
        CollisionWitness cw;
        cw.user = user;
        cw.N = N;
        cw.d = d;
        cw.w1 = r1;
        cw.w2 = r2;
        cw.w1t = r1t;
        cw.w2t = r2t;
        cw.a.resize(fvals.size());
        cw.b.resize(fvals.size());
        for (size_t k = 0; k < fvals.size(); ++k) {
            cw.a[k] = r1[k] - r1t[k];
            cw.b[k] = r2t[k] - r2[k];
        }
        cw.af = dot(cw.a, fvals);
        cw.bf = dot(cw.b, fvals);
        cw.lhs = w[i1] + g * w[j1];
        cw.rhs = w[i2] + g * w[j2];
        out.kind = CheckOutcome::Kind::Witness;
        out.witness = std::move(cw);
        return out;
    }
    TruncationCertificate cert;
    cert.user = user;
    cert.N = N;
    cert.d = d;
    cert.search_space = Int(static_cast<unsigned long>(M)) * Int(static_cast<unsigned long>(M));
    out.kind = CheckOutcome::Kind::Certificate;
    out.certificate = std::move(cert);
    return out;
}

CheckOutcome brute_force_check(const ChannelMatrix& m, int user, long N, int d,
                               const SearchOptions& opts) {
    if (user < 0 || user >= m.K()) throw std::invalid_argument("user index out of range");
    if (!is_fully_connected(m))
        throw std::invalid_argument("injectivity check requires a fully connected matrix");
    MonomialBasis basis = enumerate_monomials(m.K(), d, opts.oracle_cap);
    std::vector<Rat> fvals = eval_basis(basis, m.offdiag());
    return brute_force_check_values(fvals, m.at(user, user), user, N, d, opts);
}

std::optional<CollisionWitness> rational_diagonal_witness(const Rat& g, long N, int user) {
    if (g == 0) throw std::invalid_argument("diagonal entry must be nonzero");
    if (N < 2) throw std::invalid_argument("rational_diagonal_witness requires N >= 2");
    const Int& p = g.get_num();
    const Int& q = g.get_den();
    Int bound(N - 1);
    if (abs(p) > bound || q > bound) return std::nullopt;
    CollisionWitness w;
    w.user = user;
    w.N = N;
    w.d = 0;
    w.a = {static_cast<int>(p.get_si())};
    w.b = {static_cast<int>(q.get_si())};
    sign_split(w.a, w.w1, w.w1t);
    sign_split(w.b, w.w2t, w.w2);
    w.af = Rat(p);
    w.bf = Rat(q);
    w.lhs = Rat(w.w1[0]) + g * Rat(w.w2[0]);
    w.rhs = Rat(w.w1t[0]) + g * Rat(w.w2t[0]);
    return w;
}

bool validate_witness(const CollisionWitness& w, const std::vector<Rat>& fvals, const Rat& g) {
    const long hi = w.N - 1;
    for (const auto* vec : {&w.w1, &w.w2, &w.w1t, &w.w2t}) {
        if (vec->size() != fvals.size()) return false;
        for (int c : *vec)
            if (c < 0 || c > hi) return false;
    }
    Rat v1 = dot(w.w1, fvals), v2 = dot(w.w2, fvals);
    Rat v1t = dot(w.w1t, fvals), v2t = dot(w.w2t, fvals);
    if (v1 == v1t || v2 == v2t) return false;
    return v1 + g * v2 == v1t + g * v2t;
}

bool validate_witness_poly(const CollisionWitness& w, const std::vector<UniPoly>& fvals,
                           const UniPoly& g_num, const UniPoly& g_den) {
    const long hi = w.N - 1;
    for (const auto* vec : {&w.w1, &w.w2, &w.w1t, &w.w2t}) {
        if (vec->size() != fvals.size()) return false;
        for (int c : *vec)
            if (c < 0 || c > hi) return false;
    }
    UniPoly v1 = dot_poly(w.w1, fvals), v2 = dot_poly(w.w2, fvals);
    UniPoly v1t = dot_poly(w.w1t, fvals), v2t = dot_poly(w.w2t, fvals);
    if (v1 == v1t || v2 == v2t) return false;
    // (v1 - v1t)*g_den = g_num*(v2t - v2)
    return (v1 - v1t) * g_den == g_num * (v2t - v2);
}

}  // namespace icdof
