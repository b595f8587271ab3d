#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hyperlab/rational.hpp"

namespace hyperlab {

using Assignment = std::map<std::string, Rational>;

// A rational-function expression in named parameters, stored symbolically
// and evaluated exactly at instantiation. Division by zero at evaluation
// raises PoleError; an unbound symbol raises DomainError.
class Expr {
  public:
    Expr() : Expr(Rational(0)) {}
    Expr(Rational constant);
    Expr(long constant) : Expr(Rational(constant)) {}
    Expr(int constant) : Expr(Rational(constant)) {}

    static Expr sym(std::string name);

    Rational eval(const Assignment& env) const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);

  private:
    enum class Kind { kConst, kSymbol, kAdd, kSub, kMul, kDiv };

    struct Node {
        Kind kind;
        Rational value;
        std::string name;
        std::shared_ptr<const Node> lhs, rhs;
    };

    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Expr binary(Kind kind, const Expr& a, const Expr& b);

    std::shared_ptr<const Node> node_;
};

// Product of gammas over product of gammas, evaluated exactly by pairing
// numerator and denominator arguments whose difference is an integer and
// reducing each pair to a Pochhammer ratio. RestrictionError when no such
// pairing exists at the given assignment.
struct GammaTerm {
    std::vector<Expr> numerator;
    std::vector<Expr> denominator;

    Rational eval(const Assignment& env) const;
};

}  // namespace hyperlab
