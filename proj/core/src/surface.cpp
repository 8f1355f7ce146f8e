#include "segrelab/surface.hpp"

#include <string>

#include "segrelab/errors.hpp"

namespace segrelab {

namespace {

void require_k(int k) {
    if (k < 0) {
        throw DomainError("number of points k must be >= 0, got " + std::to_string(k));
    }
}

// (1 + c t)^e through t^order.
TruncatedSeries linear_pow(const BigRational& c, const BigRational& e, int order) {
    return rational_pow(TruncatedSeries::linear(1, c, order), e);
}

TruncatedSeries sqrt_1_2t(int order) { return linear_pow(2, make_rational(1, 2), order); }
TruncatedSeries sqrt_1_6t(int order) { return linear_pow(6, make_rational(1, 2), order); }

// (sqrt(1 + 2t) + sqrt(1 + 6t)) / 2, a unit series.
TruncatedSeries half_sqrt_sum(int order) {
    return make_rational(1, 2) * (sqrt_1_2t(order) + sqrt_1_6t(order));
}

BigRational int_q(std::int64_t v) { return make_rational(v, 1); }

}  // namespace

std::string_view to_string(GeometryKind kind) {
    switch (kind) {
    case GeometryKind::K3:
        return "k3";
    case GeometryKind::Abelian:
        return "abelian";
    case GeometryKind::Bielliptic:
        return "bielliptic";
    case GeometryKind::Enriques:
        return "enriques";
    case GeometryKind::BlowupK3:
        return "blowup-k3";
    case GeometryKind::GeneralRank1:
        break;
    }
    return "general";
}

std::optional<GeometryKind> parse_geometry(std::string_view name) {
    for (auto kind : {GeometryKind::K3, GeometryKind::Abelian, GeometryKind::Bielliptic, GeometryKind::Enriques,
                      GeometryKind::BlowupK3, GeometryKind::GeneralRank1}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

bool is_k_trivial(GeometryKind kind) {
    return kind == GeometryKind::K3 || kind == GeometryKind::Abelian || kind == GeometryKind::Bielliptic ||
           kind == GeometryKind::Enriques;
}

std::pair<std::int64_t, std::int64_t> surface_invariants(GeometryKind kind) {
    switch (kind) {
    case GeometryKind::K3:
        return {2, 0};
    case GeometryKind::Abelian:
    case GeometryKind::Bielliptic:
        return {0, 0};
    case GeometryKind::Enriques:
        return {1, 0};
    case GeometryKind::BlowupK3:
        return {2, -1};
    case GeometryKind::GeneralRank1:
        break;
    }
    throw UnsupportedGeometryError("an arbitrary surface has no fixed (chi(O), K^2)");
}

SurfaceBundle SurfaceBundle::on(GeometryKind kind, std::int64_t rank, std::int64_t c1_sq, std::int64_t c2,
                                std::int64_t c1_dot_K) {
    if (rank < 1) {
        throw InconsistentDataError("rank must be >= 1, got " + std::to_string(rank));
    }
    if (is_k_trivial(kind) && c1_dot_K != 0) {
        throw InconsistentDataError("c1.K must vanish on a K-trivial surface");
    }
    auto [chi_O, K_sq] = surface_invariants(kind);
    return SurfaceBundle{rank, c1_sq, c1_dot_K, c2, chi_O, K_sq};
}

std::int64_t chi_riemann_roch(const SurfaceBundle& b) {
    const std::int64_t twice = b.c1_sq - b.c1_dot_K;
    if (twice % 2 != 0) {
        throw InconsistentDataError("c1^2 - c1.K must be even (adjunction), got " + std::to_string(twice));
    }
    return b.rank * b.chi_O + twice / 2 - b.c2;
}

BigRational delta(GeometryKind kind, const SurfaceBundle& b) {
    const BigRational r = int_q(b.rank);
    const BigRational c1_sq = int_q(b.c1_sq);
    const BigRational c2 = int_q(b.c2);
    const BigRational half = make_rational(1, 2);
    switch (kind) {
    case GeometryKind::K3:
        return BigRational(1 + r * c2 + (1 - r) * c1_sq * half - r * r);
    case GeometryKind::Abelian:
    case GeometryKind::Bielliptic:
        return BigRational(r * c2 + (1 - r) * c1_sq * half);
    case GeometryKind::Enriques:
        return BigRational(r * c2 - (r - 1) * c1_sq * half - (r * r - 1) * half);
    default:
        break;
    }
    throw UnsupportedGeometryError(std::string("delta is defined for K-trivial surfaces only, not ") +
                                   std::string(to_string(kind)));
}

SegreValue segre_closed(GeometryKind kind, std::int64_t r, std::int64_t chi, const BigRational& delta, int k) {
    require_k(k);
    if (r < 1) {
        throw DomainError("rank must be >= 1");
    }
    const BigRational q_r = int_q(r);
    const BigRational base = int_q(chi) - delta - (q_r + 1) * k;  // chi - delta - (r+1)k
    const TruncatedSeries d_part = linear_pow(q_r + 2, delta, k);
    TruncatedSeries f = d_part;
    switch (kind) {
    case GeometryKind::K3:
        f = f * linear_pow(q_r + 1, base, k);
        break;
    case GeometryKind::Abelian:
    case GeometryKind::Bielliptic:
        f = f * linear_pow(q_r + 1, BigRational(base - 1), k) *
            TruncatedSeries::linear(1, BigRational((q_r + 1) * (q_r + 2)), k);
        break;
    case GeometryKind::Enriques:
        f = f * linear_pow(q_r + 1, BigRational(base - make_rational(1, 2)), k) *
            linear_pow(BigRational((q_r + 1) * (q_r + 2)), make_rational(1, 2), k);
        break;
    default:
        throw UnsupportedGeometryError(std::string("no closed Segre formula for ") + std::string(to_string(kind)));
    }
    return SegreValue(coefficient(f, k));
}

SegreValue segre_delta0(std::int64_t r, std::int64_t chi, int k) {
    require_k(k);
    const BigRational top = int_q(chi) - int_q(r + 1) * k;
    return SegreValue(power(int_q(r + 1), k) * binomial(top, k));
}

TruncatedSeries segre_series(GeometryKind kind, const SurfaceBundle& b, int k_max) {
    if (kind != GeometryKind::K3 && kind != GeometryKind::Enriques) {
        throw UnsupportedGeometryError("generating series is implemented for K3 and Enriques surfaces");
    }
    if (k_max < 0) {
        throw DomainError("k_max must be >= 0");
    }
    const int n = k_max;
    const std::int64_t r = b.rank;
    const BigRational q_r = int_q(r);
    const BigRational half = make_rational(1, 2);

    const TruncatedSeries one_r1 = TruncatedSeries::linear(1, q_r + 1, n);                       // 1 + (1+r)t
    const TruncatedSeries one_r2 = TruncatedSeries::linear(1, q_r + 2, n);                       // 1 + (2+r)t
    const TruncatedSeries one_r1r2 = TruncatedSeries::linear(1, BigRational((q_r + 1) * (q_r + 2)), n);

    const TruncatedSeries A0 = rational_pow(one_r1, BigRational(-q_r - 1)) * rational_pow(one_r2, q_r);
    const TruncatedSeries A1 =
        rational_pow(one_r1, BigRational(q_r * half)) * rational_pow(one_r2, BigRational(-(q_r - 1) * half));
    const TruncatedSeries A2 = rational_pow(one_r1, BigRational(q_r * q_r + 2 * q_r)) *
                               rational_pow(one_r2, BigRational(1 - q_r * q_r)) * reciprocal(one_r1r2);

    const BigRational a2_exponent = kind == GeometryKind::K3 ? BigRational(1) : half;
    const TruncatedSeries in_t = rational_pow(A0, int_q(b.c2)) * rational_pow(A1, int_q(b.c1_sq)) *
                                 rational_pow(A2, a2_exponent);

    if (n == 0) {
        return in_t;
    }
    // z = t (1 + (1+r) t)^(1+r)
    std::vector<BigRational> shifted{0};
    const TruncatedSeries phi = pow(one_r1, static_cast<unsigned>(r + 1));
    for (int i = 0; i < n; ++i) {
        shifted.push_back(phi[i]);
    }
    const TruncatedSeries z_of_t(std::move(shifted), n);
    return compose(in_t, reverse(z_of_t));
}

SegreValue segre_rank1_general(std::int64_t L_sq, std::int64_t chi_O, std::int64_t L_dot_K, std::int64_t K_sq, int k,
                               Rank1Route route) {
    require_k(k);
    const int n = k;
    const BigRational half = make_rational(1, 2);
    const TruncatedSeries s2 = sqrt_1_2t(n);
    const TruncatedSeries s6 = sqrt_1_6t(n);
    const TruncatedSeries one_2t = TruncatedSeries::linear(1, 2, n);
    const TruncatedSeries one_6t = TruncatedSeries::linear(1, 6, n);

    const TruncatedSeries A1 = s2;
    const TruncatedSeries A2 = rational_pow(one_2t, make_rational(3, 2)) * rational_pow(one_6t, -half);
    const TruncatedSeries A3 = half * reciprocal(one_2t) * (s2 + s6);
    const TruncatedSeries A4 = BigRational(4) * s2 * s6 * reciprocal(pow(s2 + s6, 2));

    const TruncatedSeries F = rational_pow(A1, int_q(L_sq)) * rational_pow(A2, int_q(chi_O)) *
                              rational_pow(A3, int_q(L_dot_K)) * rational_pow(A4, int_q(K_sq));

    const TruncatedSeries phi = pow(one_2t, 2);  // z / t
    if (route == Rank1Route::residue) {
        return SegreValue(lagrange_coefficient(F, phi, k));
    }
    if (n == 0) {
        return SegreValue(coefficient(F, 0));
    }
    std::vector<BigRational> shifted{0};
    for (int i = 0; i < n; ++i) {
        shifted.push_back(phi[i]);
    }
    const TruncatedSeries z_of_t(std::move(shifted), n);
    return SegreValue(coefficient(compose(F, reverse(z_of_t)), k));
}

TruncatedSeries sqrt_sum_series(std::int64_t m, std::int64_t n, std::int64_t p, int order) {
    const TruncatedSeries body = rational_pow(half_sqrt_sum(order), int_q(m)) *
                                 linear_pow(2, make_rational(n - 1, 2), order) *
                                 linear_pow(6, make_rational(p - 1, 2), order);
    return power(BigRational(2), m) * body;
}

SegreValue segre_blowup_k3(std::int64_t h, std::int64_t ell, int k) {
    require_k(k);
    if (ell < 0 || h < 1) {
        throw DomainError("blowup formula needs ell >= 0 and h >= 1");
    }
    const int n = k;
    const BigRational exponent_2t =
        int_q(h) - make_rational(ell * ell, 2) - 2 * k - int_q(ell) + make_rational(3, 2);
    const TruncatedSeries sum = sqrt_1_2t(n) + sqrt_1_6t(n);
    const TruncatedSeries f = linear_pow(2, exponent_2t, n) * linear_pow(6, make_rational(-1, 2), n) *
                              pow(sum, static_cast<unsigned>(ell + 2));
    return SegreValue(power(BigRational(2), -(ell + 2)) * coefficient(f, k));
}

SegreValue segre_general_type(std::int64_t m, std::int64_t n, std::int64_t p, int k) {
    require_k(k);
    if ((m + n + p) % 2 != 0) {
        throw DomainError("m + n + p must be even, got " + std::to_string(m + n + p));
    }
    // 2^(-m) (sqrt + sqrt)^m = ((sqrt + sqrt) / 2)^m
    const TruncatedSeries f = rational_pow(half_sqrt_sum(k), int_q(m)) *
                              linear_pow(2, make_rational(n - 1, 2), k) *
                              linear_pow(6, make_rational(p - 1, 2), k);
    return SegreValue(coefficient(f, k));
}

MnpTriple mnp_from_bundle(std::int64_t L_sq, std::int64_t L_dot_K, std::int64_t K_sq, std::int64_t chi_O, int k) {
    MnpTriple t;
    t.m = L_dot_K - 2 * K_sq;
    t.n = (L_sq - 2 * L_dot_K + K_sq) + 3 * chi_O - 4 * static_cast<std::int64_t>(k) - 1;
    t.p = K_sq - chi_O + 3;
    const SurfaceBundle line{1, L_sq, L_dot_K, 0, chi_O, K_sq};
    const std::int64_t chi_L = chi_riemann_roch(line);
    if (t.m + t.n + t.p != 2 * chi_L - 4 * static_cast<std::int64_t>(k) + 2) {
        throw InconsistentDataError("m + n + p != 2 chi(L) - 4k + 2");
    }
    return t;
}

}  // namespace segrelab
