#include "superjac/char_sums.hpp"

#include <mutex>
#include <tuple>

#include "superjac/error.hpp"

namespace superjac {

namespace {

Elem relative_norm(const FiniteField& E, unsigned base_degree, Elem w)
{
    Elem acc = E.one();
    const unsigned rel = E.degree() / base_degree;
    for (unsigned i = 0; i < rel; ++i)
        acc = E.mul(acc, E.frobenius(w, base_degree * i));
    return acc;
}

void check_tower(const FieldPtr& ext, const FieldPtr& base)
{
    require(ext->characteristic() == base->characteristic() && ext->degree() % base->degree() == 0,
            ErrorKind::ContextMismatch, "character base is not a subfield of " + ext->name());
}

} // namespace

std::vector<AdditiveCharacter> additive_characters(u64 p)
{
    std::vector<AdditiveCharacter> out;
    for (u64 c = 1; c < p; ++c)
        out.push_back({p, c});
    return out;
}

std::vector<MultiplicativeCharacter> multiplicative_characters(const FieldPtr& base, u64 order)
{
    require(order >= 1 && (base->size() - 1) % order == 0, ErrorKind::CharacterUnavailable,
            "no characters of order " + std::to_string(order) + " on F_" + base->name());
    std::vector<MultiplicativeCharacter> out;
    for (u64 j = 1; j < order; ++j)
        out.push_back({base, order, j});
    return out;
}

CycloInt additive_value(const AdditiveCharacter& psi, u64 z, const CycloPtr& ring)
{
    const u64 N = ring->conductor();
    require(N % psi.p == 0, ErrorKind::ContextMismatch, "conductor not divisible by p");
    return CycloInt::zeta_power(ring, static_cast<i64>(mulmod(psi.c % psi.p, z % psi.p, psi.p) * (N / psi.p)));
}

CycloInt multiplicative_value(const MultiplicativeCharacter& chi, Elem w, const CycloPtr& ring)
{
    const u64 N = ring->conductor();
    require(N % chi.order == 0, ErrorKind::ContextMismatch, "conductor not divisible by the character order");
    if (w.v == 0)
        return CycloInt(ring, chi.trivial() ? 1 : 0);
    const u64 s = chi.base->log(w) % chi.order;
    return CycloInt::zeta_power(ring, static_cast<i64>(mulmod(chi.j % chi.order, s, chi.order) * (N / chi.order)));
}

GaussTable::GaussTable(FieldPtr ext, FieldPtr base, u64 order)
    : ext_(std::move(ext)), base_(std::move(base)), p_(ext_->characteristic()), order_(order),
      abs_degree_(ext_->degree()), ring_(cyclo_ring(gauss_conductor(p_, order)))
{
    check_tower(ext_, base_);
    require((base_->size() - 1) % order_ == 0, ErrorKind::CharacterUnavailable,
            "no characters of order " + std::to_string(order_) + " on F_" + base_->name());
    require(ext_->has_tables(), ErrorKind::BudgetExceeded, "Gauss sums need a tabulated field, got F_" + ext_->name());
    const FiniteField& E = *ext_;
    // log_base N(gen^t) = t * s0 (mod |base| - 1).
    const Elem ngen = relative_norm(E, base_->degree(), E.generator());
    const u64 s0 = base_->log(embedding(base_, ext_)->preimage(ngen)) % order_;
    std::vector<u64> basis_trace(abs_degree_);
    {
        u64 t = 1;
        for (unsigned i = 0; i < abs_degree_; ++i, t *= p_)
            basis_trace[i] = E.trace(Elem{t}).v;
    }
    hist_.assign(p_ * order_, 0);
    for (u64 v = 1; v < E.size(); ++v) {
        u64 tr = 0, rest = v;
        for (unsigned i = 0; i < abs_degree_ && rest; ++i, rest /= p_)
            tr += (rest % p_) * basis_trace[i];
        const u64 s = mulmod(E.log(Elem{v}) % order_, s0, order_);
        ++hist_[(tr % p_) * order_ + s];
    }
}

CycloInt GaussTable::modified_sum(u64 a, const AdditiveCharacter& psi, const MultiplicativeCharacter& chi) const
{
    require(psi.p == p_ && chi.order == order_ && chi.base == base_, ErrorKind::ContextMismatch,
            "characters do not match the Gauss table");
    const u64 N = ring_->conductor();
    const u64 shift = mulmod(abs_degree_ % p_, a % p_, p_); // Tr(a) for a in F_p
    const u64 c = psi.c % p_, j = chi.j % order_;
    std::vector<i64> counts(N, 0);
    for (u64 u = 0; u < p_; ++u) {
        const u64 add_exp = mulmod(c, (u + p_ - shift) % p_, p_) * order_;
        for (u64 s = 0; s < order_; ++s) {
            const i64 h = hist_[u * order_ + s];
            if (h)
                counts[(add_exp + mulmod(j, s, order_) * p_) % N] += h;
        }
    }
    if (chi.trivial())
        counts[mulmod(c, (p_ - shift) % p_, p_) * order_] += 1; // w = 0 with chi(0) = 1
    return CycloInt::from_group_ring(ring_, counts);
}

std::shared_ptr<const GaussTable> gauss_table(const FieldPtr& ext, const FieldPtr& base, u64 order)
{
    using Key = std::tuple<u64, unsigned, unsigned, u64>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const GaussTable>> cache;
    const Key key{ext->characteristic(), ext->degree(), base->degree(), order};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto table = std::make_shared<const GaussTable>(ext, base, order);
    std::lock_guard lock(mu);
    return cache.emplace(key, table).first->second;
}

GaussSumRecord modified_gauss_sum(const FieldPtr& field, u64 a, const AdditiveCharacter& psi,
                                  const MultiplicativeCharacter& chi)
{
    require(a % psi.p != 0, ErrorKind::ZeroShift, "the shift a must be nonzero");
    auto table = gauss_table(field, chi.base, chi.order);
    CycloInt value = table->modified_sum(a, psi, chi);
    if (!psi.trivial() && !chi.trivial()) {
        const u64 p = psi.p;
        const u64 minus_tr_a = (p - mulmod(field->degree() % p, a % p, p)) % p;
        CycloInt shifted = additive_value(psi, minus_tr_a, table->ring()) * table->modified_sum(0, psi, chi);
        require(shifted == value, ErrorKind::InvariantViolation, "shift identity G_a = psi(-a) G failed");
    }
    return {field, a % psi.p, psi, chi, value};
}

CycloInt modified_gauss_sum_direct(const FieldPtr& field, u64 a, const AdditiveCharacter& psi,
                                   const MultiplicativeCharacter& chi)
{
    check_tower(field, chi.base);
    const FiniteField& E = *field;
    const u64 p = psi.p;
    CycloPtr ring = cyclo_ring(gauss_conductor(p, chi.order));
    auto emb = embedding(chi.base, field);
    const Elem shift = E.from_int(static_cast<i64>(a % p));
    CycloInt acc(ring);
    for (u64 v = 0; v < E.size(); ++v) {
        const Elem w{v};
        const Elem nw = emb->preimage(relative_norm(E, chi.base->degree(), w));
        CycloInt cw = multiplicative_value(chi, nw, ring);
        if (cw.is_zero())
            continue;
        acc += additive_value(psi, E.trace(E.sub(w, shift)).v, ring) * cw;
    }
    return acc;
}

bool hasse_davenport_check(u64 a, const AdditiveCharacter& psi, const MultiplicativeCharacter& chi, unsigned n)
{
    require(n >= 1, ErrorKind::InvalidArgument, "extension degree must be positive");
    const FieldPtr& B = chi.base;
    FieldPtr E = field(B->characteristic(), B->degree() * n);
    CycloInt lhs = -gauss_table(E, B, chi.order)->modified_sum(a, psi, chi);
    CycloInt rhs = (-gauss_table(B, B, chi.order)->modified_sum(a, psi, chi)).pow(n);
    return lhs == rhs;
}

bool gauss_norm_check(const GaussSumRecord& record)
{
    auto v = (record.value * record.value.conjugate()).to_integer();
    return v && *v == record.field->cardinality();
}

} // namespace superjac
