#include "twistlab/expr.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "twistlab/errors.hpp"
#include "twistlab/tensor.hpp"

namespace twistlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fn_name(const AnalyticFnSpec& f) {
    switch (f.kind) {
        case AnalyticFnSpec::Kind::exp:
            return "exp";
        case AnalyticFnSpec::Kind::log1p:
            return "log1p";
        case AnalyticFnSpec::Kind::pow1p: {
            std::ostringstream os;
            os << "pow1p[" << f.exponent << "]";
            return os.str();
        }
    }
    return "?";
}

}  // namespace

Expr Expr::gen(int i, int j) {
    if (i < 1 || j < 1) throw IndexOutOfRange("E_" + std::to_string(i) + "," + std::to_string(j));
    return Expr(Node{Gen{i, j}});
}

Expr Expr::scalar(Rational value) { return Expr(Node{Scalar{std::move(value)}}); }

Expr Expr::sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    for (auto& t : terms) {
        if (const auto* s = std::get_if<Sum>(&t.node()))
            flat.insert(flat.end(), s->terms.begin(), s->terms.end());
        else
            flat.push_back(std::move(t));
    }
    if (flat.size() == 1) return flat.front();
    return Expr(Node{Sum{std::move(flat)}});
}

Expr Expr::prod(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    for (auto& f : factors) {
        if (const auto* p = std::get_if<Prod>(&f.node()))
            flat.insert(flat.end(), p->factors.begin(), p->factors.end());
        else
            flat.push_back(std::move(f));
    }
    if (flat.size() == 1) return flat.front();
    return Expr(Node{Prod{std::move(flat)}});
}

Expr Expr::fn(AnalyticFnSpec f, Expr sub) { return Expr(Node{Fn{std::move(f), {std::move(sub)}}}); }

Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }

Expr operator-(const Expr& a) { return Expr::prod({Expr::scalar(Rational(-1)), a}); }

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    return std::visit(
        overloaded{
            [](const Expr::Gen& x, const Expr::Gen& y) { return x.i == y.i && x.j == y.j; },
            [](const Expr::Scalar& x, const Expr::Scalar& y) { return x.value == y.value; },
            [](const Expr::Sum& x, const Expr::Sum& y) { return x.terms == y.terms; },
            [](const Expr::Prod& x, const Expr::Prod& y) { return x.factors == y.factors; },
            [](const Expr::Fn& x, const Expr::Fn& y) { return x.f == y.f && x.sub == y.sub; },
            [](const auto&, const auto&) { return false; },
        },
        a.node(), b.node());
}

std::string Expr::to_string() const {
    return std::visit(overloaded{
                          [](const Gen& g) { return "E" + std::to_string(g.i) + "," + std::to_string(g.j); },
                          [](const Scalar& s) {
                              std::ostringstream os;
                              os << s.value;
                              return os.str();
                          },
                          [](const Sum& s) {
                              std::string out = "(";
                              for (std::size_t k = 0; k < s.terms.size(); ++k)
                                  out += (k ? " + " : "") + s.terms[k].to_string();
                              return out + ")";
                          },
                          [](const Prod& p) {
                              std::string out;
                              for (std::size_t k = 0; k < p.factors.size(); ++k)
                                  out += (k ? "*" : "") + p.factors[k].to_string();
                              return out;
                          },
                          [](const Fn& f) { return fn_name(f.f) + "(" + f.sub.front().to_string() + ")"; },
                      },
                      node());
}

int Expr::max_index() const {
    return std::visit(overloaded{
                          [](const Gen& g) { return std::max(g.i, g.j); },
                          [](const Scalar&) { return 0; },
                          [](const Sum& s) {
                              int m = 0;
                              for (const auto& t : s.terms) m = std::max(m, t.max_index());
                              return m;
                          },
                          [](const Prod& p) {
                              int m = 0;
                              for (const auto& t : p.factors) m = std::max(m, t.max_index());
                              return m;
                          },
                          [](const Fn& f) { return f.sub.front().max_index(); },
                      },
                      node());
}

Expr sigma(int i, int j) { return Expr::fn(AnalyticFnSpec::log1p_fn(), Expr::gen(i, j)); }

const SparseMatrix& Morphism::image(int i, int j) const {
    if (i < 1 || j < 1 || i > N || j > N)
        throw IndexOutOfRange("E_" + std::to_string(i) + "," + std::to_string(j) + " for N=" + std::to_string(N));
    return images[static_cast<std::size_t>((i - 1) * N + (j - 1))];
}

Morphism fundamental_morphism(int N) {
    if (N < 2) throw IndexOutOfRange("fundamental representation needs N >= 2, got " + std::to_string(N));
    Morphism phi{N, static_cast<std::size_t>(N), {}};
    phi.images.reserve(static_cast<std::size_t>(N * N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            phi.images.push_back(SparseMatrix::elementary(static_cast<std::size_t>(N), static_cast<std::size_t>(i),
                                                          static_cast<std::size_t>(j)));
    return phi;
}

Morphism primitive_extension(const Morphism& phi) {
    Morphism out{phi.N, phi.target_dim * phi.target_dim, {}};
    out.images.reserve(phi.images.size());
    const auto id = SparseMatrix::identity(phi.target_dim);
    for (const auto& m : phi.images) out.images.push_back(kron(m, id) + kron(id, m));
    return out;
}

Morphism coproduct_morphism(int N) { return primitive_extension(fundamental_morphism(N)); }

Morphism zero_morphism(int N) {
    Morphism phi{N, 1, {}};
    phi.images.assign(static_cast<std::size_t>(N * N), SparseMatrix(1));
    return phi;
}

SparseMatrix eval_expr(const Expr& e, const Morphism& phi) {
    return std::visit(overloaded{
                          [&](const Expr::Gen& g) { return phi.image(g.i, g.j); },
                          [&](const Expr::Scalar& s) { return s.value * SparseMatrix::identity(phi.target_dim); },
                          [&](const Expr::Sum& s) {
                              SparseMatrix acc(phi.target_dim);
                              for (const auto& t : s.terms) acc += eval_expr(t, phi);
                              return acc;
                          },
                          [&](const Expr::Prod& p) {
                              // Scalars only rescale; they never enter a matrix product.
                              Rational scale(1);
                              std::optional<SparseMatrix> acc;
                              for (const auto& f : p.factors) {
                                  if (const auto* s = std::get_if<Expr::Scalar>(&f.node())) {
                                      scale *= s->value;
                                      continue;
                                  }
                                  acc = acc ? *acc * eval_expr(f, phi) : eval_expr(f, phi);
                                  if (acc->is_zero()) return *acc;
                              }
                              if (!acc) return scale * SparseMatrix::identity(phi.target_dim);
                              return scale * *acc;
                          },
                          [&](const Expr::Fn& f) { return analytic_apply(f.f, eval_expr(f.sub.front(), phi)); },
                      },
                      e.node());
}

Rational counit_eval(const Expr& e) {
    return std::visit(
        overloaded{
            [](const Expr::Gen&) { return Rational(0); },
            [](const Expr::Scalar& s) { return s.value; },
            [](const Expr::Sum& s) {
                Rational acc(0);
                for (const auto& t : s.terms) acc += counit_eval(t);
                return acc;
            },
            [](const Expr::Prod& p) {
                Rational acc(1);
                for (const auto& f : p.factors) acc *= counit_eval(f);
                return acc;
            },
            [](const Expr::Fn& f) {
                Rational c = counit_eval(f.sub.front());
                if (c.is_zero()) return f.f.coefficient(0);
                // Only (1 + c)^q with q a non-negative integer stays rational.
                if (f.f.kind == AnalyticFnSpec::Kind::pow1p && f.f.exponent.is_integer() && f.f.exponent.sign() >= 0) {
                    Rational base = Rational(1) + c;
                    Rational acc(1);
                    for (Rational k(0); k < f.f.exponent; k += Rational(1)) acc *= base;
                    return acc;
                }
                throw NotNilpotent("counit of " + f.sub.front().to_string() + " is " + c.to_string());
            },
        },
        e.node());
}

Expr antipode(const Expr& e) {
    return std::visit(overloaded{
                          [&](const Expr::Gen&) { return -e; },
                          [&](const Expr::Scalar&) { return e; },
                          [](const Expr::Sum& s) {
                              std::vector<Expr> terms;
                              for (const auto& t : s.terms) terms.push_back(antipode(t));
                              return Expr::sum(std::move(terms));
                          },
                          [](const Expr::Prod& p) {
                              std::vector<Expr> factors;
                              for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it)
                                  factors.push_back(antipode(*it));
                              return Expr::prod(std::move(factors));
                          },
                          [](const Expr::Fn& f) { return Expr::fn(f.f, antipode(f.sub.front())); },
                      },
                      e.node());
}

SparseMatrix antipode_eval(const Expr& e, const Morphism& phi) { return eval_expr(antipode(e), phi); }

Expr relabel(const Expr& e, const std::map<int, int>& map) {
    auto idx = [&](int k) {
        auto it = map.find(k);
        return it == map.end() ? k : it->second;
    };
    return std::visit(overloaded{
                          [&](const Expr::Gen& g) { return Expr::gen(idx(g.i), idx(g.j)); },
                          [&](const Expr::Scalar&) { return e; },
                          [&](const Expr::Sum& s) {
                              std::vector<Expr> terms;
                              for (const auto& t : s.terms) terms.push_back(relabel(t, map));
                              return Expr::sum(std::move(terms));
                          },
                          [&](const Expr::Prod& p) {
                              std::vector<Expr> factors;
                              for (const auto& f : p.factors) factors.push_back(relabel(f, map));
                              return Expr::prod(std::move(factors));
                          },
                          [&](const Expr::Fn& f) { return Expr::fn(f.f, relabel(f.sub.front(), map)); },
                      },
                      e.node());
}

}  // namespace twistlab
