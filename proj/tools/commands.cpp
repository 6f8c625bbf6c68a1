#include "commands.hpp"

#include <sstream>

#include "superjac/char_sums.hpp"
#include "superjac/delta.hpp"
#include "superjac/error.hpp"
#include "superjac/picard.hpp"
#include "superjac/rank.hpp"
#include "superjac/zeta.hpp"

namespace superjac::cli {

const std::string& Args::str(const std::string& name) const
{
    auto it = values.find(name);
    require(it != values.end(), ErrorKind::InvalidArgument, "missing --" + name);
    return it->second;
}

u64 Args::u(const std::string& name) const
{
    const std::string& s = str(name);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == s.size() && !s.empty() && s[0] != '-', ErrorKind::InvalidArgument,
            "--" + name + " expects a non-negative integer, got '" + s + "'");
    return v;
}

u64 Args::u(const std::string& name, u64 fallback) const { return has(name) ? u(name) : fallback; }

std::vector<i64> Args::list(const std::string& name) const { return parse_int_list(str(name)); }

std::string Args::canonical(const std::string& op) const
{
    std::ostringstream out;
    out << kVersion << '|' << op;
    for (const auto& [k, v] : values)
        out << '|' << k << '=' << v;
    out << "|seed=" << seed << "|budget=" << (budget ? std::to_string(*budget) : "default");
    return out.str();
}

namespace {

Json num(const mpz_class& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

Json nums(const std::vector<mpz_class>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(num(x));
    return out;
}

mpz_class big(const Args& a, const std::string& name)
{
    mpz_class v;
    require(v.set_str(a.str(name), 10) == 0, ErrorKind::InvalidArgument, "--" + name + " expects an integer");
    return v;
}

unsigned small(const Args& a, const std::string& name, u64 fallback)
{
    const u64 v = a.u(name, fallback);
    require(v <= 1u << 20, ErrorKind::InvalidArgument, "--" + name + " is out of range");
    return static_cast<unsigned>(v);
}

std::vector<mpq_class> rational_coeffs(const std::vector<i64>& c)
{
    std::vector<mpq_class> out;
    for (i64 v : c)
        out.emplace_back(static_cast<long>(v));
    return out;
}

u64 count_budget(const Args& a) { return a.budget.value_or(kDefaultCountBudget); }
u64 picard_budget(const Args& a) { return a.budget.value_or(kDefaultPicardBudget); }

Json structure_json(const GroupStructure& s)
{
    return Json{{"structure", s.to_string()}, {"invariants", nums(s.invariants)}, {"order", num(s.order())}};
}

Json lpoly_json(const LPolynomial& P)
{
    return Json{{"g", P.g}, {"text", P.to_string()}, {"coefficients", nums(P.c)}};
}

CachedResult genus(const Args& a)
{
    const unsigned m = small(a, "m", 0);
    unsigned r = 0;
    if (a.has("f")) {
        auto f = a.list("f");
        while (!f.empty() && f.back() == 0)
            f.pop_back();
        require(!f.empty(), ErrorKind::InvalidArgument, "--f is the zero polynomial");
        r = static_cast<unsigned>(f.size() - 1);
    } else {
        r = small(a, "r", 0);
    }
    const auto gd = genus_data(m, r);
    return {Json{{"m", m}, {"r", gd.r}, {"d", gd.d}, {"g", gd.g}}, 0};
}

CachedResult delta(const Args& a)
{
    const unsigned m = small(a, "m", 0), r = small(a, "r", 0);
    const auto gd = genus_data(m, r);
    const auto factors = delta_structure(m, r);
    return {Json{{"m", m},
                 {"r", r},
                 {"d", gd.d},
                 {"g", gd.g},
                 {"factors", nums(factors)},
                 {"structure", GroupStructure{factors}.to_string()}},
            0};
}

Json certificate_json(const ProofCertificate& c)
{
    Json fns = Json::array();
    for (const auto& f : c.functions)
        fns.push_back({{"i", f.i},
                       {"j", f.j},
                       {"divisor", f.divisor.to_string()},
                       {"in_space", f.in_space},
                       {"order_at_last", f.order_at_last}});
    Json checks = Json::array();
    for (const auto& ch : c.checks)
        checks.push_back({{"tag", ch.tag}, {"pass", ch.pass}, {"detail", ch.detail}});
    auto pairs = [](const std::vector<std::pair<unsigned, unsigned>>& v) {
        Json out = Json::array();
        for (auto [i, j] : v)
            out.push_back({i, j});
        return out;
    };
    return Json{{"curve", c.curve_id},
                {"reduction", c.reduction},
                {"g", c.g},
                {"E", c.E.to_string()},
                {"A", pairs(c.A)},
                {"B", pairs(c.B)},
                {"functions", fns},
                {"triangular_witness", c.triangular_witness},
                {"seed", c.seed},
                {"rank_field", c.rank_field},
                {"rank_attempts", c.rank_attempts},
                {"rank", c.rank},
                {"checks", checks},
                {"verdict", c.verdict ? "pass" : "fail"}};
}

CachedResult proof_replay(const Args& a)
{
    const unsigned m = small(a, "m", 0);
    const std::string where = a.has("field") ? a.str("field") : "Q";
    ProofCertificate cert;
    if (where == "Q")
        cert = replay_proof(make_rational_curve(m, rational_coeffs(a.list("f"))), a.seed);
    else {
        const CurveSpec c = make_curve(m, a.list("f"), parse_field(where));
        cert = replay_proof(c.split() ? c : split_base_change(c), a.seed);
    }
    return {certificate_json(cert), cert.verdict ? 0 : 1};
}

CachedResult principal(const Args& a)
{
    const unsigned m = small(a, "m", 0);
    const auto f = a.list("f");
    std::vector<long> coeffs;
    for (i64 v : a.list("coeffs"))
        coeffs.push_back(static_cast<long>(v));
    std::optional<CurveSpec> c;
    if (a.has("field")) {
        c = make_curve(m, f, parse_field(a.str("field")));
    } else {
        // Over Q the criterion is read on the first good reduction.
        const RationalCurve rc = make_rational_curve(m, rational_coeffs(f));
        for (u64 p = 3; p < 1000 && !c; p += 2)
            if (is_prime_u64(p))
                c = reduce_mod(rc, p);
        require(c.has_value(), ErrorKind::Unsupported, "no good reduction below 1000");
    }
    const auto dec = decide_principal_delta(*c, coeffs);
    Json out{{"curve", c->canonical()},
             {"divisor", dec.divisor.to_string()},
             {"principal", dec.principal},
             {"oracle_checked", dec.oracle_checked}};
    out["witness"] = dec.witness ? Json(fn::to_string(*dec.witness)) : Json(nullptr);
    return {out, 0};
}

CachedResult gauss(const Args& a)
{
    const u64 p = a.u("p"), q = a.u("q"), aa = a.u("a");
    const unsigned n = small(a, "n", 1);
    require(n >= 1, ErrorKind::InvalidArgument, "--n must be positive");
    const FieldPtr base = field(p), ext = field(p, n);
    Json records = Json::array();
    bool ok = true;
    for (const auto& psi : additive_characters(p)) {
        for (const auto& chi : multiplicative_characters(base, q)) {
            const auto rec = modified_gauss_sum(ext, aa, psi, chi);
            const bool norm = gauss_norm_check(rec);
            const bool hd = n == 1 || hasse_davenport_check(aa, psi, chi, n);
            ok = ok && norm && hd;
            records.push_back({{"c", psi.c},
                               {"j", chi.j},
                               {"value", rec.value.to_string()},
                               {"norm", norm},
                               {"hasse_davenport", hd}});
        }
    }
    return {Json{{"p", p},
                 {"q", q},
                 {"a", aa},
                 {"n", n},
                 {"conductor", gauss_conductor(p, q)},
                 {"sums", records},
                 {"all_checks", ok}},
            ok ? 0 : 1};
}

Json count_json(const PointCount& c)
{
    return Json{{"affine", num(c.affine)}, {"infinite", num(c.infinite)}, {"total", num(c.total)}};
}

CachedResult count(const Args& a)
{
    const u64 p = a.u("p"), q = a.u("q"), aa = a.u("a");
    const unsigned n = small(a, "n", 1);
    const std::string route = a.has("route") ? a.str("route") : "both";
    require(route == "naive" || route == "charsum" || route == "both", ErrorKind::InvalidArgument,
            "--route is naive, charsum or both");
    Json out{{"p", p}, {"q", q}, {"a", aa}, {"n", n}};
    std::optional<PointCount> naive, chars;
    if (route != "charsum")
        naive = count_affine_naive(artin_schreier_curve(p, q, aa), n, count_budget(a));
    if (route != "naive")
        chars = count_charsum(p, q, aa, n);
    if (naive)
        out["naive"] = count_json(*naive);
    if (chars)
        out["charsum"] = count_json(*chars);
    int code = 0;
    if (naive && chars) {
        const bool agree = naive->total == chars->total && naive->affine == chars->affine;
        out["agree"] = agree;
        code = agree ? 0 : 1;
    }
    return {out, code};
}

CachedResult zeta(const Args& a)
{
    const u64 p = a.u("p"), q = a.u("q"), aa = a.u("a");
    const unsigned l = small(a, "l", 1);
    const auto fz = family_zeta(p, q, l, aa, count_budget(a));
    check_lpoly(fz.P);
    return {Json{{"p", p},
                 {"q", q},
                 {"l", l},
                 {"a", aa},
                 {"route", fz.route},
                 {"ord", fz.k},
                 {"P", lpoly_json(fz.P)},
                 {"jacobian_order", num(jacobian_order(fz.P, 1))}},
            0};
}

CachedResult jac_order(const Args& a)
{
    const u64 p = a.u("p"), q = a.u("q"), aa = a.u("a");
    const unsigned l = small(a, "l", 1), ext = small(a, "ext", 1);
    require(ext >= 1, ErrorKind::InvalidArgument, "--ext must be positive");
    const auto fz = family_zeta(p, q, l, aa, count_budget(a));
    return {Json{{"p", p},
                 {"q", q},
                 {"l", l},
                 {"a", aa},
                 {"ext", ext},
                 {"route", fz.route},
                 {"jacobian_order", num(jacobian_order(fz.P, ext))}},
            0};
}

CachedResult torsion(const Args& a)
{
    const auto t = torsion_criterion(a.u("p"), a.u("q"), small(a, "l", 1), a.u("a", 1), count_budget(a));
    Json out{{"p", t.p}, {"q", t.q}, {"l", t.l}, {"a", t.a}, {"ord", t.ord}, {"has_torsion", t.has_torsion}};
    out["route"] = t.route.empty() ? Json(nullptr) : Json(t.route);
    out["jacobian_order"] = t.jacobian_order ? num(*t.jacobian_order) : Json(nullptr);
    out["q_divides"] = t.q_divides ? Json(*t.q_divides) : Json(nullptr);
    out["consistent"] = t.consistent();
    if (!t.note.empty())
        out["note"] = t.note;
    return {out, t.consistent() ? 0 : 1};
}

CachedResult power_law(const Args& a)
{
    const auto r = power_law_check(a.u("p"), a.u("q"), a.u("a"), count_budget(a));
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"k", row.k}, {"order", num(row.order)}, {"power", num(row.power)}, {"equal", row.equal}});
    return {Json{{"p", r.p},
                 {"q", r.q},
                 {"a", r.a},
                 {"ord", r.k},
                 {"route", r.route},
                 {"base_order", num(r.base_order)},
                 {"rows", rows},
                 {"holds", r.holds()}},
            r.holds() ? 0 : 1};
}

CachedResult picard(const Args& a)
{
    const unsigned m = small(a, "m", 0), ext = small(a, "ext", 1);
    const CurveSpec c = make_curve(m, a.list("f"), field(a.u("p"), ext));
    const auto res = picard_group(c, picard_budget(a));
    Json out{{"curve", c.canonical()},
             {"g", c.g},
             {"classes", res.table->size()},
             {"expected_order", num(res.expected_order)}};
    out.update(structure_json(res.structure));
    return {out, 0};
}

CachedResult conjecture(const Args& a)
{
    const auto r = conjecture_check(a.u("p"), a.u("q"), a.u("a"), picard_budget(a));
    return {Json{{"p", r.p},
                 {"q", r.q},
                 {"a", r.a},
                 {"k", r.k},
                 {"base", structure_json(r.base)},
                 {"extension", structure_json(r.extension)},
                 {"base_power", structure_json(r.expected)},
                 {"consistent", r.consistent}},
            0};
}

Json hypotheses_json(const HypothesisReport& rep)
{
    Json out = Json::array();
    for (const auto& h : rep.items)
        out.push_back({{"id", h.id}, {"statement", h.statement}, {"witness", h.witness}, {"pass", h.pass}});
    return out;
}

CachedResult rank_certify(const Args& a)
{
    const auto c = evaluate_theorem2(a.u("p"), a.u("q"), big(a, "k"));
    Json evidence = nullptr;
    if (c.hypotheses.all_pass())
        evidence = Json{{"a", c.a},
                        {"separable", c.separable},
                        {"jacobian_order", num(c.jacobian_order)},
                        {"q_divides", c.q_divides}};
    Json out{{"curve", {{"m", c.m}, {"roots", nums(c.roots)}, {"k", num(c.k)}}},
             {"prime", c.prime},
             {"independence_prime", c.independence_prime ? Json(c.independence_prime) : Json(nullptr)},
             {"hypotheses", hypotheses_json(c.hypotheses)},
             {"evidence", evidence},
             {"generators", c.generators},
             {"relation", {{"statement", c.relation}, {"verified", c.relation_verified}}}};
    out["conclusion"] = {{"rank_lower_bound", c.rank_lower_bound ? Json(*c.rank_lower_bound) : Json(nullptr)}};
    if (!c.note.empty())
        out["note"] = c.note;
    return {out, c.rank_lower_bound ? 0 : 1};
}

CachedResult find_prime(const Args& a)
{
    const u64 m = a.u("m");
    std::vector<mpz_class> roots;
    for (i64 v : a.list("roots"))
        roots.emplace_back(static_cast<long>(v));
    const mpz_class k = big(a, "k");
    const auto p = find_witness_prime(m, roots, k);
    Json out{{"m", m}, {"roots", nums(roots)}, {"k", num(k)}};
    out["prime"] = p ? Json(*p) : Json(nullptr);
    if (p)
        out["hypotheses"] = hypotheses_json(check_prop4_hypotheses(m, roots, k, *p));
    return {out, p ? 0 : 1};
}

} // namespace

const std::vector<Command>& commands()
{
    static const std::vector<Command> all = {
        {"genus", "genus of y^m = F(x)", {{"m"}, {"r", false}, {"f", false, "coefficients [c_0,...]"}}, genus},
        {"delta-structure", "invariant factors of the ramification subgroup", {{"m"}, {"r"}}, delta},
        {"proof-replay",
         "replay the independence argument for the f_ij",
         {{"m"}, {"f", true, "coefficients [c_0,...]"}, {"field", false, "Q (default), p or p^n"}},
         proof_replay},
        {"principal",
         "decide whether sum a_i (R_i - inf) is principal",
         {{"m"}, {"f"}, {"coeffs", true, "[a_1,...,a_{r-1}]"}, {"field", false}},
         principal},
        {"gauss", "modified Gauss sums G_a(psi, chi)", {{"p"}, {"q"}, {"a"}, {"n", false}}, gauss},
        {"count",
         "points of y^q = x^p - x + a over F_{p^n}",
         {{"p"}, {"q"}, {"a"}, {"n"}, {"route", false, "naive, charsum or both"}},
         count},
        {"zeta", "zeta numerator of y^{q^l} = x^p - x + a", {{"p"}, {"q"}, {"a"}, {"l", false}}, zeta},
        {"jacobian-order", "|J(F_{p^ext})|", {{"p"}, {"q"}, {"a"}, {"ext", false}, {"l", false}}, jac_order},
        {"torsion-test", "q-torsion criterion with evidence", {{"p"}, {"q"}, {"l", false}, {"a", false}}, torsion},
        {"power-law", "|J(F_{p^k})| against |J(F_p)|^k", {{"p"}, {"q"}, {"a"}}, power_law},
        {"picard", "brute-force divisor class group", {{"m"}, {"f"}, {"p"}, {"ext", false}}, picard},
        {"conjecture-test", "J(F_{p^k}) against J(F_p)^k", {{"p"}, {"q"}, {"a"}}, conjecture},
        {"rank-certify", "rank lower bound for y^q = x(x-1)...(x-p+1) + k^q", {{"p"}, {"q"}, {"k"}}, rank_certify},
        {"find-prime", "prime divisor of k meeting the independence hypotheses", {{"m"}, {"roots"}, {"k"}},
         find_prime},
    };
    return all;
}

} // namespace superjac::cli
