#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "twistlab/analytic.hpp"
#include "twistlab/rational.hpp"
#include "twistlab/sparse_matrix.hpp"

namespace twistlab {

/// Symbolic element of U(gl(N)): generators E_ij, scalars, sums, ordered
/// products and analytic functions f(1 + sub) of a nilpotent sub-expression.
///
/// Trees are immutable and shared. The only normalization performed is
/// flattening of nested sums and products.
class Expr {
public:
    struct Gen {
        int i;
        int j;
    };
    struct Scalar {
        Rational value;
    };
    struct Sum {
        std::vector<Expr> terms;
    };
    struct Prod {
        std::vector<Expr> factors;
    };
    struct Fn {
        AnalyticFnSpec f;
        std::vector<Expr> sub;  // exactly one element
    };
    using Node = std::variant<Gen, Scalar, Sum, Prod, Fn>;

    Expr() : Expr(scalar(Rational(0))) {}

    static Expr gen(int i, int j);
    static Expr scalar(Rational value);
    static Expr sum(std::vector<Expr> terms);
    static Expr prod(std::vector<Expr> factors);
    static Expr fn(AnalyticFnSpec f, Expr sub);

    [[nodiscard]] const Node& node() const { return *node_; }
    [[nodiscard]] std::string to_string() const;
    /// Largest generator index occurring in the tree (0 if none).
    [[nodiscard]] int max_index() const;

    friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr operator*(const Expr& a, const Expr& b) { return prod({a, b}); }
    friend Expr operator*(const Rational& c, const Expr& a) { return prod({scalar(c), a}); }
    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
    std::shared_ptr<const Node> node_;
};

/// ln(1 + E_ij).
[[nodiscard]] Expr sigma(int i, int j);

/// An algebra morphism U(gl(N)) -> End(C^target_dim) fixed by generator images.
struct Morphism {
    int N = 0;
    std::size_t target_dim = 0;
    std::vector<SparseMatrix> images;  // row-major over (i, j)

    [[nodiscard]] const SparseMatrix& image(int i, int j) const;
};

/// E_ij -> elementary matrix on C^N.
[[nodiscard]] Morphism fundamental_morphism(int N);

/// x -> x ⊗ 1 + 1 ⊗ x on top of the fundamental representation.
[[nodiscard]] Morphism coproduct_morphism(int N);

/// x -> phi(x) ⊗ 1 + 1 ⊗ phi(x): the undeformed coproduct composed with phi ⊗ phi.
[[nodiscard]] Morphism primitive_extension(const Morphism& phi);

/// Every generator to 0 on a one-dimensional space.
[[nodiscard]] Morphism zero_morphism(int N);

[[nodiscard]] SparseMatrix eval_expr(const Expr& e, const Morphism& phi);

[[nodiscard]] Rational counit_eval(const Expr& e);

/// Tree form of the undeformed antipode: E_ij -> -E_ij, products reversed.
[[nodiscard]] Expr antipode(const Expr& e);

[[nodiscard]] SparseMatrix antipode_eval(const Expr& e, const Morphism& phi);

/// Renames generator indices through `map`; indices absent from the map stay.
[[nodiscard]] Expr relabel(const Expr& e, const std::map<int, int>& map);

}  // namespace twistlab
