#include "superjac/delta.hpp"

#include <algorithm>
#include <random>

#include "superjac/error.hpp"
#include "superjac/linalg.hpp"
#include "superjac/picard.hpp"

namespace superjac {

std::optional<std::vector<mpz_class>> DeltaPresentation::coordinates(const std::vector<long>& a, long b) const
{
    require(a.size() == r, ErrorKind::InvalidArgument, "need one coefficient per ramification point");
    long sum = 0;
    for (long v : a)
        sum += v;
    if (sum % static_cast<long>(d) != 0 || b != -sum / static_cast<long>(d))
        return std::nullopt;
    std::vector<mpz_class> out;
    for (unsigned i = 0; i + 2 < r; ++i)
        out.emplace_back(a[i]);
    out.emplace_back(sum / static_cast<long>(d));
    out.emplace_back(a[r - 1]);
    return out;
}

DeltaPresentation delta_presentation(unsigned m, unsigned r)
{
    require(m >= 2 && r >= 2, ErrorKind::InvalidArgument, "need m >= 2 and r >= 2");
    DeltaPresentation P;
    P.m = m;
    P.r = r;
    P.d = genus_data(m, r).d;
    P.relations = IntMatrix(r + 1, r);
    auto put = [&](std::size_t row, const std::vector<long>& a, long b) {
        auto coords = P.coordinates(a, b);
        require(coords.has_value(), ErrorKind::InvariantViolation, "relation outside the ambient lattice");
        for (std::size_t k = 0; k < r; ++k)
            P.relations.at(row, k) = (*coords)[k];
    };
    for (unsigned i = 0; i < r; ++i) {
        std::vector<long> a(r, 0);
        a[i] = m;
        put(i, a, -static_cast<long>(m / P.d));
    }
    put(r, std::vector<long>(r, 1), -static_cast<long>(r / P.d));
    return P;
}

std::vector<mpz_class> delta_structure(unsigned m, unsigned r)
{
    return nontrivial_factors(smith_normal_form(delta_presentation(m, r).relations));
}

std::vector<std::pair<unsigned, unsigned>> basis_index_set(unsigned m, unsigned r)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 1; i < r; ++i)
        for (unsigned j = 1; j < m; ++j)
            if (static_cast<long>(i) * m > static_cast<long>(j) * r)
                out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<unsigned, unsigned>> complement_index_set(unsigned m, unsigned r)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 1; i < r; ++i)
        for (unsigned j = 1; j < m; ++j)
            if (static_cast<long>(i) * m < static_cast<long>(j) * r)
                out.emplace_back(i, j);
    return out;
}

FunctionRep basis_function(const CurveSpec& c, unsigned i, unsigned j)
{
    require(c.split(), ErrorKind::RootsUnavailable, "F does not split over the base field");
    require(i >= 1 && i <= c.r && j < c.m, ErrorKind::InvalidArgument, "index out of range");
    const FiniteField& K = c.K();
    FPoly den{K.one()};
    for (unsigned k = 0; k < i; ++k)
        den = fpoly::mul(K, den, fpoly::linear(K, c.roots[k]));
    std::vector<FPoly> num(c.m);
    num[j] = FPoly{K.one()};
    return FunctionRep{num, den};
}

Divisor basis_function_divisor(const CurveSpec& c, unsigned i, unsigned j)
{
    Divisor D;
    for (unsigned k = 0; k < c.r; ++k)
        D.add(Place::ramification(c, k), k < i ? static_cast<i64>(j) - c.m : static_cast<i64>(j));
    D.add(Place::infinity(c), (static_cast<i64>(i) * c.m - static_cast<i64>(j) * c.r) / c.d);
    return D;
}

std::vector<BasisElement> rr_basis(const CurveSpec& c)
{
    require(c.split(), ErrorKind::RootsUnavailable, "F does not split over " + c.K().name());
    auto A = basis_index_set(c.m, c.r);
    require(A.size() == c.g, ErrorKind::InvariantViolation, "|A| != g");
    std::vector<BasisElement> out;
    for (auto [i, j] : A) {
        BasisElement b{i, j, basis_function(c, i, j), {}};
        b.divisor = principal_divisor(c, b.f);
        const Divisor formula = basis_function_divisor(c, i, j);
        require(b.divisor == formula, ErrorKind::CheckFailed,
                "divisor-formula: (" + std::to_string(i) + "," + std::to_string(j) + ") engine " +
                    b.divisor.to_string() + " vs formula " + formula.to_string());
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

std::string pair_list(const std::vector<std::pair<unsigned, unsigned>>& v)
{
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ",(" : "(") + std::to_string(v[k].first) + "," + std::to_string(v[k].second) + ")";
    return s + "}";
}

// Rank of (f_ij(P_s)) at g random affine points off the ramification locus.
std::size_t random_rank(const CurveSpec& c, const std::vector<BasisElement>& basis, const FieldPtr& Lp,
                        std::mt19937_64& rng)
{
    const FiniteField& L = *Lp;
    auto emb = embedding(c.field, Lp);
    const FPoly F = fpoly::map(*emb, c.F);
    std::vector<Elem> roots;
    for (Elem a : c.roots)
        roots.push_back((*emb)(a));
    std::uniform_int_distribution<u64> pick(0, L.size() - 1);
    FMatrix M;
    while (M.size() < basis.size()) {
        const Elem x{pick(rng)};
        const Elem w = fpoly::eval(L, F, x);
        if (w.v == 0)
            continue;
        auto ys = L.roots_of_power(w, c.m);
        if (ys.empty())
            continue;
        const Elem y = ys[pick(rng) % ys.size()];
        std::vector<Elem> row;
        for (const auto& b : basis) {
            Elem den = L.one();
            for (unsigned k = 0; k < b.i; ++k)
                den = L.mul(den, L.sub(x, roots[k]));
            row.push_back(L.div(L.pow(y, b.j), den));
        }
        M.push_back(std::move(row));
    }
    return rank(L, std::move(M), basis.size());
}

FieldPtr rank_field(const CurveSpec& c)
{
    const u64 p = c.K().characteristic();
    const unsigned e = c.K().degree();
    unsigned s = 1;
    u64 size = c.K().size();
    while (size < 4096) {
        ++s;
        require(checked_pow(p, e * s, size), ErrorKind::Unsupported, "evaluation field overflow");
    }
    require(size <= FiniteField::kTableLimit, ErrorKind::Unsupported, "evaluation field too large for tables");
    return field(p, e * s);
}

} // namespace

ProofCertificate replay_proof(const CurveSpec& c, u64 seed)
{
    require(c.split(), ErrorKind::RootsUnavailable, "F does not split over " + c.K().name());
    ProofCertificate cert;
    cert.curve_id = c.canonical();
    cert.g = c.g;
    cert.seed = seed;
    auto add = [&](std::string tag, bool pass, std::string detail) {
        cert.checks.push_back({std::move(tag), pass, std::move(detail)});
    };

    // E = -inf + (m - 1)(R_1 + ... + R_{r-1}).
    cert.E.add(Place::infinity(c), -1);
    for (unsigned k = 0; k + 1 < c.r; ++k)
        cert.E.add(Place::ramification(c, k), c.m - 1);
    const i64 degE = cert.E.degree(c);
    add("degree-E", degE == 2 * static_cast<i64>(c.g) - 1, "deg E = " + std::to_string(degE));

    cert.A = basis_index_set(c.m, c.r);
    cert.B = complement_index_set(c.m, c.r);
    bool bijection = cert.A.size() == cert.B.size();
    for (auto [i, j] : cert.A)
        bijection = bijection && std::find(cert.B.begin(), cert.B.end(), std::make_pair(c.r - i, c.m - j)) != cert.B.end();
    add("cardinality", cert.A.size() == c.g && cert.A.size() + cert.B.size() == 2 * c.g && bijection,
        "|A| = " + std::to_string(cert.A.size()) + ", |A u B| = " + std::to_string(cert.A.size() + cert.B.size()));

    std::vector<BasisElement> basis;
    try {
        basis = rr_basis(c);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CheckFailed && e.kind() != ErrorKind::InvariantViolation)
            throw;
        add("membership", false, e.what());
        cert.verdict = false;
        return cert;
    }
    const Place last = Place::ramification(c, c.r - 1);
    bool member = true, vanish = true;
    for (const auto& b : basis) {
        FunctionRecord rec{b.i, b.j, b.divisor, (cert.E + b.divisor).is_effective(), valuation(c, b.f, last)};
        member = member && rec.in_space;
        vanish = vanish && rec.order_at_last == static_cast<int>(b.j) && b.j >= 1;
        cert.functions.push_back(std::move(rec));
    }
    add("membership", member, "E + div(f_ij) >= 0 for all (i,j) in A");
    add("vanishing", vanish, "ord_{R_r} f_ij = j");

    // Triangularity: at R_k, f_kj has a pole of order m - j and f_ij (i < k) is regular.
    bool tri = true;
    for (const auto& b : basis) {
        const Place Rk = Place::ramification(c, b.i - 1);
        const int own = valuation(c, b.f, Rk);
        bool ok = own == static_cast<int>(b.j) - static_cast<int>(c.m);
        for (const auto& o : basis)
            if (o.i < b.i)
                ok = ok && valuation(c, o.f, Rk) >= 0;
        tri = tri && ok;
        cert.triangular_witness.push_back("ord_R" + std::to_string(b.i) + " f_" + std::to_string(b.i) +
                                          std::to_string(b.j) + " = " + std::to_string(own));
    }
    add("triangular", tri, "pole orders at R_k distinct per j, lower indices regular");

    FieldPtr Lp = rank_field(c);
    cert.rank_field = Lp->name();
    std::mt19937_64 rng(seed);
    for (cert.rank_attempts = 1; cert.rank_attempts <= 3; ++cert.rank_attempts) {
        cert.rank = random_rank(c, basis, Lp, rng);
        if (cert.rank == c.g)
            break;
    }
    cert.rank_attempts = std::min(cert.rank_attempts, 3u);
    add("random-rank", cert.rank == c.g,
        "rank " + std::to_string(cert.rank) + " over F_" + cert.rank_field + " after " +
            std::to_string(cert.rank_attempts) + " attempt(s), A = " + pair_list(cert.A));

    cert.verdict = true;
    for (const auto& ch : cert.checks)
        cert.verdict = cert.verdict && ch.pass;
    return cert;
}

ProofCertificate replay_proof(const RationalCurve& c, u64 seed)
{
    for (u64 p = 3; p < 10000; p += 2) {
        if (!is_prime_u64(p))
            continue;
        auto red = reduce_mod(c, p);
        if (!red)
            continue;
        unsigned max_degree = 0;
        for (u64 size = p; size <= (u64{1} << 20); size *= p)
            ++max_degree;
        try {
            ProofCertificate cert = replay_proof(split_base_change(*red, max_degree), seed);
            cert.curve_id = c.canonical();
            cert.reduction = std::to_string(p);
            return cert;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::RootsUnavailable)
                throw;
        }
    }
    fail(ErrorKind::RootsUnavailable, "no good prime below 10^4 with a small splitting field");
}

void require_pass(const ProofCertificate& cert)
{
    for (const auto& ch : cert.checks)
        require(ch.pass, ErrorKind::CheckFailed, ch.tag + ": " + ch.detail);
    require(cert.verdict, ErrorKind::CheckFailed, "verdict");
}

DeltaDecision decide_principal_delta(const CurveSpec& c_in, const std::vector<long>& coeffs, bool cross_check)
{
    require(c_in.d == 1, ErrorKind::RequiresD1, "the divisibility criterion is stated for gcd(m, r) = 1");
    require(coeffs.size() + 1 == c_in.r, ErrorKind::InvalidArgument, "need r - 1 coefficients");
    const CurveSpec c = c_in.split() ? c_in : split_base_change(c_in);
    DeltaDecision out;
    out.principal = true;
    long sum = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out.principal = out.principal && coeffs[i] % static_cast<long>(c.m) == 0;
        out.divisor.add(Place::ramification(c, static_cast<unsigned>(i)), coeffs[i]);
        sum += coeffs[i];
    }
    out.divisor.add(Place::infinity(c), -sum);
    if (cross_check) {
        auto oracle = is_principal(c, out.divisor);
        require(oracle.principal == out.principal, ErrorKind::OracleMismatch,
                "Riemann-Roch oracle disagrees on " + out.divisor.to_string());
        out.oracle_checked = true;
        out.witness = oracle.witness;
    }
    return out;
}

} // namespace superjac
