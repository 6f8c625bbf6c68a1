#include "superjac/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <tuple>

#include "superjac/error.hpp"

namespace superjac {

namespace {

// ---- prime-field polynomial helpers used only to find defining polynomials ----

using PPoly = std::vector<u64>;

void ptrim(PPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, u64 p)
{
    ptrim(a);
    const std::size_t dm = m.size() - 1;
    const u64 lead_inv = invmod(m.back(), p);
    while (a.size() > dm) {
        u64 c = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t k = 0; k <= dm; ++k)
            a[shift + k] = (a[shift + k] + p - mulmod(c, m[k], p)) % p;
        ptrim(a);
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return pmod(std::move(r), m, p);
}

PPoly ppowmod(PPoly base, u64 e, const PPoly& m, u64 p)
{
    PPoly result{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1)
            result = pmulmod(result, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

PPoly pgcd(PPoly a, PPoly b, u64 p)
{
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        a = pmod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

PPoly psub(PPoly a, const PPoly& b, u64 p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    ptrim(a);
    return a;
}

// Rabin's test: f of degree n is irreducible iff t^{p^n} = t mod f and
// gcd(t^{p^{n/l}} - t, f) = 1 for every prime l | n.
bool is_irreducible(const PPoly& f, u64 p)
{
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    std::vector<PPoly> frob(n + 1);
    frob[0] = pmod(PPoly{0, 1}, f, p);
    for (unsigned k = 1; k <= n; ++k)
        frob[k] = ppowmod(frob[k - 1], p, f, p);
    const PPoly t = pmod(PPoly{0, 1}, f, p);
    if (psub(frob[n], t, p).size() != 0)
        return false;
    for (u64 l : prime_divisors(static_cast<u64>(n))) {
        PPoly g = pgcd(psub(frob[n / l], t, p), f, p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

std::vector<u64> first_irreducible(u64 p, unsigned n)
{
    u64 count = 0;
    require(checked_pow(p, n, count), ErrorKind::InvalidArgument, "field too large");
    for (u64 idx = 0; idx < count; ++idx) {
        PPoly f(n + 1, 0);
        u64 t = idx;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[n] = 1;
        if (f[0] == 0 && n > 1)
            continue;
        if (is_irreducible(f, p))
            return f;
    }
    fail(ErrorKind::InvariantViolation, "no irreducible polynomial found");
}

} // namespace

FiniteField::FiniteField(u64 p, unsigned n, std::vector<u64> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus))
{
    require(checked_pow(p, n, q_), ErrorKind::InvalidArgument, "field size exceeds 2^62");
    place_.resize(n + 1);
    place_[0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        place_[i] = place_[i - 1] * p;
    if (q_ > 2)
        unit_factors_ = factorize(q_ - 1);
    find_generator();
}

std::shared_ptr<const FiniteField> FiniteField::prime(u64 p)
{
    require(is_prime_u64(p), ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    return std::shared_ptr<const FiniteField>(new FiniteField(p, 1, {0, 1}));
}

std::shared_ptr<const FiniteField> FiniteField::extension(u64 p, unsigned n)
{
    require(is_prime_u64(p), ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    require(n >= 1, ErrorKind::InvalidArgument, "extension degree must be positive");
    if (n == 1)
        return prime(p);
    return std::shared_ptr<const FiniteField>(new FiniteField(p, n, first_irreducible(p, n)));
}

void FiniteField::find_generator()
{
    if (q_ == 2) {
        generator_ = one();
        return;
    }
    for (u64 cand = 1; cand < q_; ++cand) {
        Elem g{cand};
        if (pow_poly(g, q_ - 1) != one())
            continue;
        bool ok = true;
        for (auto& [l, e] : unit_factors_) {
            if (pow_poly(g, (q_ - 1) / l) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = g;
            return;
        }
    }
    fail(ErrorKind::InvariantViolation, "no generator found");
}

mpz_class FiniteField::cardinality() const
{
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), p_, n_);
    return c;
}

std::string FiniteField::name() const
{
    return n_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(n_);
}

Elem FiniteField::from_coeffs(std::span<const u64> coeffs) const
{
    require(coeffs.size() <= n_, ErrorKind::InvalidArgument, "too many coefficients");
    u64 v = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        v += (coeffs[i] % p_) * place_[i];
    return {v};
}

std::vector<u64> FiniteField::coeffs(Elem a) const
{
    std::vector<u64> c(n_);
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = a.v % p_;
        a.v /= p_;
    }
    return c;
}

Elem FiniteField::add(Elem a, Elem b) const
{
    if (n_ == 1) {
        u64 s = a.v + b.v;
        return {s >= p_ ? s - p_ : s};
    }
    if (p_ == 2)
        return {a.v ^ b.v};
    u64 out = 0;
    for (unsigned i = 0; i < n_; ++i) {
        u64 s = a.v % p_ + b.v % p_;
        if (s >= p_)
            s -= p_;
        out += s * place_[i];
        a.v /= p_;
        b.v /= p_;
    }
    return {out};
}

Elem FiniteField::neg(Elem a) const
{
    if (n_ == 1)
        return {a.v == 0 ? 0 : p_ - a.v};
    if (p_ == 2)
        return a;
    u64 out = 0;
    for (unsigned i = 0; i < n_; ++i) {
        u64 c = a.v % p_;
        out += (c == 0 ? 0 : p_ - c) * place_[i];
        a.v /= p_;
    }
    return {out};
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul_poly(Elem a, Elem b) const
{
    if (n_ == 1)
        return {mulmod(a.v, b.v, p_)};
    if (a.v == 0 || b.v == 0)
        return zero();
    if (p_ == 2) {
        // Carry-less multiplication in F_2[t] followed by reduction.
        u64 mod_bits = 0;
        for (unsigned i = 0; i < n_; ++i)
            mod_bits |= modulus_[i] << i;
        u64 acc = 0;
        u64 x = a.v;
        for (u64 y = b.v; y; y >>= 1) {
            if (y & 1)
                acc ^= x;
            x <<= 1;
            if (x >> n_ & 1)
                x = (x ^ (u64{1} << n_)) ^ mod_bits;
        }
        return {acc};
    }
    std::vector<u64> ca = coeffs(a), cb = coeffs(b);
    std::vector<u64> r(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (ca[i] == 0)
            continue;
        for (unsigned j = 0; j < n_; ++j) {
            if (cb[j] == 0)
                continue;
            r[i + j] = (r[i + j] + mulmod(ca[i], cb[j], p_)) % p_;
        }
    }
    for (std::size_t i = r.size(); i-- > n_;) {
        u64 c = r[i];
        if (c == 0)
            continue;
        for (unsigned k = 0; k < n_; ++k)
            r[i - n_ + k] = (r[i - n_ + k] + p_ - mulmod(c, modulus_[k], p_)) % p_;
        r[i] = 0;
    }
    u64 v = 0;
    for (unsigned i = 0; i < n_; ++i)
        v += r[i] * place_[i];
    return {v};
}

Elem FiniteField::pow_poly(Elem a, u64 e) const
{
    Elem result = one();
    while (e) {
        if (e & 1)
            result = mul_poly(result, a);
        a = mul_poly(a, a);
        e >>= 1;
    }
    return result;
}

void FiniteField::ensure_tables() const
{
    std::call_once(tables_once_, [this] {
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        Elem cur = one();
        for (u64 k = 0; k + 1 < q_; ++k) {
            exp_[k] = static_cast<std::uint32_t>(cur.v);
            log_[cur.v] = static_cast<std::uint32_t>(k);
            cur = mul_poly(cur, generator_);
        }
        if (cur != one())
            fail(ErrorKind::InvariantViolation, "generator order mismatch while building tables");
    });
}

Elem FiniteField::mul(Elem a, Elem b) const
{
    if (n_ == 1)
        return {mulmod(a.v, b.v, p_)};
    if (a.v == 0 || b.v == 0)
        return zero();
    if (!has_tables())
        return mul_poly(a, b);
    ensure_tables();
    u64 s = static_cast<u64>(log_[a.v]) + log_[b.v];
    if (s >= q_ - 1)
        s -= q_ - 1;
    return {exp_[s]};
}

Elem FiniteField::inv(Elem a) const
{
    require(a.v != 0, ErrorKind::InvalidArgument, "inverse of zero");
    if (n_ == 1)
        return {invmod(a.v, p_)};
    if (!has_tables())
        return pow_poly(a, q_ - 2);
    ensure_tables();
    u64 l = log_[a.v];
    return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Elem FiniteField::pow(Elem a, u64 e) const
{
    if (e == 0)
        return one();
    if (a.v == 0)
        return zero();
    if (n_ == 1)
        return {powmod(a.v, e, p_)};
    if (!has_tables())
        return pow_poly(a, e % (q_ - 1) == 0 ? q_ - 1 : e % (q_ - 1));
    ensure_tables();
    return {exp_[mulmod(log_[a.v], e % (q_ - 1), q_ - 1)]};
}

Elem FiniteField::pow(Elem a, const mpz_class& e) const
{
    require(e >= 0, ErrorKind::InvalidArgument, "negative exponent");
    if (e == 0)
        return one();
    if (a.v == 0)
        return zero();
    mpz_class r = e % mpz_class(static_cast<unsigned long>(q_ - 1));
    u64 red = r.get_ui();
    if (red == 0)
        return one();
    return pow(a, red);
}

Elem FiniteField::frobenius(Elem a, unsigned k) const
{
    k %= n_;
    if (k == 0 || a.v == 0)
        return a;
    if (has_tables()) {
        ensure_tables();
        return {exp_[mulmod(log_[a.v], place_[k] % (q_ - 1), q_ - 1)]};
    }
    for (unsigned i = 0; i < k; ++i)
        a = pow_poly(a, p_);
    return a;
}

Elem FiniteField::trace(Elem a) const
{
    Elem s = zero();
    Elem c = a;
    for (unsigned i = 0; i < n_; ++i) {
        s = add(s, c);
        c = frobenius(c);
    }
    require(in_prime_field(s), ErrorKind::InvariantViolation, "trace left the prime field");
    return s;
}

Elem FiniteField::norm(Elem a) const
{
    Elem s = one();
    Elem c = a;
    for (unsigned i = 0; i < n_; ++i) {
        s = mul(s, c);
        c = frobenius(c);
    }
    require(in_prime_field(s), ErrorKind::InvariantViolation, "norm left the prime field");
    return s;
}

u64 FiniteField::log(Elem a) const
{
    require(a.v != 0, ErrorKind::InvalidArgument, "log of zero");
    require(has_tables(), ErrorKind::BudgetExceeded, "discrete log needs a field of at most 2^24 elements");
    if (q_ == 2)
        return 0;
    ensure_tables();
    return log_[a.v];
}

Elem FiniteField::exp(u64 k) const
{
    if (q_ == 2)
        return one();
    if (!has_tables())
        return pow_poly(generator_, k % (q_ - 1));
    ensure_tables();
    return {exp_[k % (q_ - 1)]};
}

u64 FiniteField::count_roots_of_power(Elem a, u64 m) const
{
    if (a.v == 0)
        return 1;
    u64 g0 = std::gcd(m, q_ - 1);
    if (has_tables())
        return log(a) % g0 == 0 ? g0 : 0;
    return pow(a, (q_ - 1) / g0) == one() ? g0 : 0;
}

std::vector<Elem> FiniteField::roots_of_power(Elem a, u64 m) const
{
    if (a.v == 0)
        return {zero()};
    require(has_tables(), ErrorKind::BudgetExceeded, "root extraction needs a tabulated field");
    const u64 order = q_ - 1;
    const u64 g0 = std::gcd(m, order);
    const u64 l = log(a);
    if (l % g0 != 0)
        return {};
    const u64 sub = order / g0;
    u64 t0 = sub == 1 ? 0 : mulmod((l / g0) % sub, invmod((m / g0) % sub, sub), sub);
    std::vector<Elem> out;
    for (u64 k = 0; k < g0; ++k)
        out.push_back(exp(t0 + k * sub));
    std::sort(out.begin(), out.end());
    return out;
}

// ---- registry ----

namespace {

struct Registry {
    std::mutex mu;
    std::map<std::pair<u64, unsigned>, FieldPtr> fields;
    std::map<std::tuple<const FiniteField*, const FiniteField*>, EmbeddingPtr> embeddings;
    std::map<std::tuple<const FiniteField*, const FiniteField*, const FiniteField*>, EmbeddingPtr> compat;
};

Registry& registry()
{
    static Registry r;
    return r;
}

} // namespace

FieldPtr field(u64 p, unsigned n)
{
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.fields.find({p, n});
        if (it != reg.fields.end())
            return it->second;
    }
    FieldPtr f = FiniteField::extension(p, n);
    std::lock_guard lock(reg.mu);
    auto [it, inserted] = reg.fields.emplace(std::make_pair(p, n), f);
    return it->second;
}

FieldPtr parse_field(const std::string& text)
{
    auto caret = text.find('^');
    try {
        if (caret == std::string::npos)
            return field(std::stoull(text), 1);
        return field(std::stoull(text.substr(0, caret)), static_cast<unsigned>(std::stoul(text.substr(caret + 1))));
    } catch (const std::logic_error&) {
        fail(ErrorKind::InvalidArgument, "cannot parse field '" + text + "'");
    }
}

FieldEmbedding::FieldEmbedding(FieldPtr from, FieldPtr to, Elem root_image)
    : from_(std::move(from)), to_(std::move(to)), root_(root_image)
{
    powers_.push_back(to_->one());
    for (unsigned i = 1; i < from_->degree(); ++i)
        powers_.push_back(to_->mul(powers_.back(), root_));
    if (from_->size() <= (u64{1} << 20)) {
        table_.resize(from_->size());
        for (u64 v = 0; v < from_->size(); ++v) {
            u64 t = v;
            Elem acc = to_->zero();
            for (unsigned i = 0; i < from_->degree(); ++i) {
                acc = to_->add(acc, to_->scale(powers_[i], static_cast<i64>(t % from_->characteristic())));
                t /= from_->characteristic();
            }
            table_[v] = acc;
            inverse_.emplace_back(acc, Elem{v});
        }
        std::sort(inverse_.begin(), inverse_.end());
    }
}

Elem FieldEmbedding::operator()(Elem a) const
{
    if (!table_.empty())
        return table_[a.v];
    auto c = from_->coeffs(a);
    Elem acc = to_->zero();
    for (unsigned i = 0; i < c.size(); ++i)
        acc = to_->add(acc, to_->scale(powers_[i], static_cast<i64>(c[i])));
    return acc;
}

bool FieldEmbedding::in_image(Elem b) const
{
    if (inverse_.empty())
        return to_->pow(b, from_->size()) == b;
    auto it = std::lower_bound(inverse_.begin(), inverse_.end(), std::make_pair(b, Elem{0}));
    return it != inverse_.end() && it->first == b;
}

Elem FieldEmbedding::preimage(Elem b) const
{
    require(!inverse_.empty(), ErrorKind::Unsupported, "preimage needs a source field of at most 2^20 elements");
    auto it = std::lower_bound(inverse_.begin(), inverse_.end(), std::make_pair(b, Elem{0}));
    require(it != inverse_.end() && it->first == b, ErrorKind::InvalidArgument, "element not in embedded subfield");
    return it->second;
}

namespace {

Elem eval_modulus(const FiniteField& top, const std::vector<u64>& mu, Elem x)
{
    Elem acc = top.zero();
    for (std::size_t i = mu.size(); i-- > 0;)
        acc = top.add(top.mul(acc, x), top.from_int(static_cast<i64>(mu[i])));
    return acc;
}

// Roots of the modulus of `sub` inside `top`, in order of discrete exponent within the
// subfield of matching size.
template <class Accept>
Elem find_root(const FiniteField& sub, const FiniteField& top, Accept accept)
{
    require(top.degree() % sub.degree() == 0, ErrorKind::InvalidArgument,
            "F_" + sub.name() + " does not embed in F_" + top.name());
    if (sub.degree() == 1)
        return top.one();
    const u64 cofactor = (top.size() - 1) / (sub.size() - 1);
    const Elem gamma = top.pow(top.generator(), cofactor);
    Elem cand = top.one();
    for (u64 t = 0; t + 1 < sub.size(); ++t) {
        if (eval_modulus(top, sub.modulus(), cand) == top.zero() && accept(cand))
            return cand;
        cand = top.mul(cand, gamma);
    }
    fail(ErrorKind::InvariantViolation, "no root of the defining polynomial in the extension");
}

} // namespace

EmbeddingPtr embedding(const FieldPtr& base, const FieldPtr& ext)
{
    auto& reg = registry();
    auto key = std::make_tuple(base.get(), ext.get());
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.embeddings.find(key);
        if (it != reg.embeddings.end())
            return it->second;
    }
    require(base->characteristic() == ext->characteristic(), ErrorKind::ContextMismatch, "characteristics differ");
    Elem root = base.get() == ext.get() ? Elem{base->degree() == 1 ? 1 : base->characteristic()}
                                        : find_root(*base, *ext, [](Elem) { return true; });
    auto emb = std::make_shared<const FieldEmbedding>(base, ext, root);
    std::lock_guard lock(reg.mu);
    return reg.embeddings.emplace(key, emb).first->second;
}

EmbeddingPtr compatible_embedding(const FieldPtr& base, const FieldPtr& mid, const FieldPtr& top)
{
    if (base->degree() == 1 || base.get() == mid.get())
        return embedding(mid, top);
    auto& reg = registry();
    auto key = std::make_tuple(base.get(), mid.get(), top.get());
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.compat.find(key);
        if (it != reg.compat.end())
            return it->second;
    }
    const Elem theta{base->characteristic()};
    const Elem in_mid = (*embedding(base, mid))(theta);
    const Elem in_top = (*embedding(base, top))(theta);
    const auto digits = mid->coeffs(in_mid);
    auto accept = [&](Elem rho) {
        Elem acc = top->zero();
        Elem pw = top->one();
        for (u64 c : digits) {
            acc = top->add(acc, top->scale(pw, static_cast<i64>(c)));
            pw = top->mul(pw, rho);
        }
        return acc == in_top;
    };
    Elem root = mid.get() == top.get() ? Elem{mid->characteristic()} : find_root(*mid, *top, accept);
    auto emb = std::make_shared<const FieldEmbedding>(mid, top, root);
    std::lock_guard lock(reg.mu);
    return reg.compat.emplace(key, emb).first->second;
}

} // namespace superjac
