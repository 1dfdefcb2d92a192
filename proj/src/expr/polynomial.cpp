#include "gaugework/expr/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "gaugework/expr/errors.hpp"

namespace gaugework::expr {

const char* to_string(ExprErrorKind kind) {
    switch (kind) {
        case ExprErrorKind::UnknownSymbol: return "UnknownSymbol";
        case ExprErrorKind::SyntaxError: return "SyntaxError";
        case ExprErrorKind::DivisionByZeroLiteral: return "DivisionByZeroLiteral";
        case ExprErrorKind::IdenticallyZeroDenominator: return "IdenticallyZeroDenominator";
        case ExprErrorKind::DenominatorVanishesAtPoint: return "DenominatorVanishesAtPoint";
        case ExprErrorKind::UnboundSymbol: return "UnboundSymbol";
    }
    return "ExprError";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Symbol s, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) {
        m.entries_.emplace_back(s, exponent);
        m.degree_ = exponent;
    }
    return m;
}

std::uint32_t Monomial::exponent(Symbol s) const {
    for (const auto& [sym, e] : entries_) {
        if (sym == s) return e;
    }
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    auto it = other.entries_.begin();
    for (const auto& [sym, e] : entries_) {
        while (it != other.entries_.end() && it->first < sym) ++it;
        if (it == other.entries_.end() || !(it->first == sym) || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            out.entries_.push_back(*b++);
        } else {
            out.entries_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial out;
    auto b = other.entries_.begin();
    for (const auto& [sym, e] : entries_) {
        std::uint32_t sub = 0;
        if (b != other.entries_.end() && b->first == sym) sub = (b++)->second;
        if (e > sub) out.entries_.emplace_back(sym, e - sub);
    }
    out.degree_ = degree_ - other.degree_;
    return out;
}

Monomial Monomial::restricted(const std::set<Symbol>& keep) const {
    Monomial out;
    for (const auto& entry : entries_) {
        if (keep.contains(entry.first)) {
            out.entries_.push_back(entry);
            out.degree_ += entry.second;
        }
    }
    return out;
}

Monomial Monomial::without(Symbol s) const {
    Monomial out;
    for (const auto& entry : entries_) {
        if (!(entry.first == s)) {
            out.entries_.push_back(entry);
            out.degree_ += entry.second;
        }
    }
    return out;
}

std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    auto ea = a.entries();
    auto eb = b.entries();
    std::size_t n = std::min(ea.size(), eb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!(ea[i].first == eb[i].first)) {
            // The monomial carrying the earlier symbol is the larger one.
            return ea[i].first < eb[i].first ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (auto c = ea[i].second <=> eb[i].second; c != 0) return c;
    }
    return ea.size() <=> eb.size();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const BigRational& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(Symbol s) { return term(Monomial::of(s), BigRational(1)); }

Polynomial Polynomial::term(const Monomial& m, const BigRational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

BigRational Polynomial::constant_value() const {
    if (terms_.empty()) return BigRational(0);
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? BigRational(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::uint32_t Polynomial::degree_in(Symbol s) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
    return d;
}

std::set<Symbol> Polynomial::symbols() const {
    std::set<Symbol> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [s, e] : m.entries()) out.insert(s);
    }
    return out;
}

bool Polynomial::depends_on(Symbol s) const {
    for (const auto& [m, c] : terms_) {
        if (m.exponent(s) > 0) return true;
    }
    return false;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    add_scaled(other, BigRational(1), Monomial{});
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    add_scaled(other, BigRational(-1), Monomial{});
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
}

void Polynomial::add_scaled(const Polynomial& other, const BigRational& c, const Monomial& m) {
    if (c == 0) return;
    const bool unit_monomial = m.is_one();
    for (const auto& [om, oc] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(unit_monomial ? om : om * m);
        it->second += oc * c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    Polynomial out;
    BigRational product;
    for (const auto& [sm, sc] : small.terms_) {
        for (const auto& [lm, lc] : large.terms_) {
            product = sc * lc;
            auto [it, inserted] = out.terms_.try_emplace(sm * lm);
            it->second += product;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(BigRational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(Symbol s) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exponent(s);
        if (e == 0) continue;
        Monomial reduced = m.without(s) * Monomial::of(s, e - 1);
        auto [it, inserted] = out.terms_.try_emplace(std::move(reduced));
        it->second += c * e;
        if (it->second == 0) out.terms_.erase(it);
    }
    return out;
}

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1, used by the quick
// non-divisibility filter in exact_divide.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_mod(r, a);
        a = mul_mod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t mpz_mod_prime(const BigInt& z) {
    BigInt r = z % BigInt(static_cast<unsigned long>(kPrime));
    if (r < 0) r += BigInt(static_cast<unsigned long>(kPrime));
    return r.get_ui();
}

std::optional<std::uint64_t> rational_mod(const BigRational& c) {
    std::uint64_t den = mpz_mod_prime(c.get_den());
    if (den == 0) return std::nullopt;
    return mul_mod(mpz_mod_prime(c.get_num()), pow_mod(den, kPrime - 2));
}

// Fixed pseudo-random value per symbol, derived from its name.
std::uint64_t symbol_value(Symbol s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s.name()) h = (h ^ ch) * 1099511628211ull;
    return h % kPrime;
}

// Coefficients (by power of `var`) of p with every other symbol specialized.
std::optional<std::vector<std::uint64_t>> specialize(const Polynomial& p, Symbol var) {
    std::vector<std::uint64_t> out(p.degree_in(var) + 1, 0);
    for (const auto& [m, c] : p.terms()) {
        auto v = rational_mod(c);
        if (!v) return std::nullopt;
        std::uint64_t term = *v;
        std::uint32_t k = 0;
        for (const auto& [sym, e] : m.entries()) {
            if (sym == var) k = e;
            else term = mul_mod(term, pow_mod(symbol_value(sym), e));
        }
        out[k] = (out[k] + term) % kPrime;
    }
    return out;
}

// True when a univariate image proves `divisor` cannot divide `dividend`.
bool provably_not_divisible(const Polynomial& dividend, const Polynomial& divisor, Symbol var) {
    auto f = specialize(divisor, var);
    if (!f || f->back() == 0) return false;
    auto n = specialize(dividend, var);
    if (!n) return false;
    const std::size_t df = f->size() - 1;
    const std::uint64_t inv = pow_mod(f->back(), kPrime - 2);
    for (std::size_t k = n->size(); k-- > df;) {
        std::uint64_t q = mul_mod((*n)[k], inv);
        if (q == 0) continue;
        for (std::size_t j = 0; j <= df; ++j) {
            std::uint64_t sub = mul_mod(q, (*f)[j]);
            auto& slot = (*n)[k - df + j];
            slot = (slot + kPrime - sub) % kPrime;
        }
    }
    for (std::size_t k = 0; k < df && k < n->size(); ++k) {
        if ((*n)[k] != 0) return true;
    }
    return false;
}

}  // namespace

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return Polynomial{};
    if (divisor.is_constant()) {
        Polynomial q = *this;
        q *= BigRational(1) / divisor.constant_value();
        return q;
    }
    // Cheap necessary condition: per-symbol degrees must fit.
    for (Symbol s : divisor.symbols()) {
        if (degree_in(s) < divisor.degree_in(s)) return std::nullopt;
    }
    if (provably_not_divisible(*this, divisor, divisor.leading_monomial().entries().front().first)) {
        return std::nullopt;
    }
    const Monomial& lead = divisor.leading_monomial();
    const BigRational lead_inv = BigRational(1) / divisor.leading_coefficient();
    Polynomial remainder = *this;
    Polynomial quotient;
    while (!remainder.is_zero()) {
        const Monomial& rm = remainder.leading_monomial();
        if (!lead.divides(rm)) return std::nullopt;
        Monomial qm = rm / lead;
        BigRational qc = remainder.leading_coefficient() * lead_inv;
        quotient.terms_.emplace(qm, qc);
        remainder.add_scaled(divisor, -qc, qm);
    }
    return quotient;
}

std::pair<BigRational, Polynomial> Polynomial::primitive_split() const {
    if (is_zero()) return {BigRational(0), Polynomial{}};
    BigInt den_lcm = 1;
    for (const auto& [m, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    BigInt num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        BigInt scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    BigRational content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_coefficient() < 0) content = -content;
    Polynomial primitive = *this;
    primitive *= BigRational(1) / content;
    return {content, primitive};
}

BigRational Polynomial::evaluate(const Assignment& point) const {
    BigRational total = 0;
    BigRational term;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (const auto& [s, e] : m.entries()) {
            auto it = point.find(s);
            if (it == point.end()) {
                throw ExprError(ExprErrorKind::UnboundSymbol, "symbol '" + s.name() + "' is not bound");
            }
            BigRational power;
            mpz_pow_ui(power.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
            mpz_pow_ui(power.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
            term *= power;
        }
        total += term;
    }
    return total;
}

std::map<Monomial, Polynomial, LeadingFirst> Polynomial::coefficients_over(const std::set<Symbol>& basis) const {
    std::map<Monomial, Polynomial, LeadingFirst> out;
    for (const auto& [m, c] : terms_) {
        Monomial inside = m.restricted(basis);
        Monomial outside = m / inside;
        out[inside].terms_.emplace(outside, c);
    }
    return out;
}

std::string Polynomial::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigRational magnitude = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (magnitude != 1 || m.is_one()) {
            os << to_string(magnitude);
            wrote = true;
        }
        for (const auto& [s, e] : m.entries()) {
            if (wrote) os << '*';
            os << s.name();
            if (e > 1) os << '^' << e;
            wrote = true;
        }
    }
    return os.str();
}

std::strong_ordering compare(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (auto c = graded_lex(ia->first, ib->first); c != 0) return c;
        int cc = cmp(ia->second, ib->second);
        if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

}  // namespace gaugework::expr
