#include "hyperlab/expr.hpp"

#include <algorithm>

namespace hyperlab {

Expr::Expr(Rational constant) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kConst;
    node->value = std::move(constant);
    node_ = std::move(node);
}

Expr Expr::sym(std::string name) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kSymbol;
    node->name = std::move(name);
    return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::binary(Kind kind, const Expr& a, const Expr& b) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->lhs = a.node_;
    node->rhs = b.node_;
    return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kAdd, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kSub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kMul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kDiv, a, b); }
Expr operator-(const Expr& a) { return Expr(Rational(0)) - a; }

Rational Expr::eval(const Assignment& env) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::kConst:
            return n.value;
        case Kind::kSymbol: {
            auto it = env.find(n.name);
            if (it == env.end()) throw DomainError("unbound parameter: " + n.name);
            return it->second;
        }
        case Kind::kAdd:
            return Expr(n.lhs).eval(env) + Expr(n.rhs).eval(env);
        case Kind::kSub:
            return Expr(n.lhs).eval(env) - Expr(n.rhs).eval(env);
        case Kind::kMul:
            return Expr(n.lhs).eval(env) * Expr(n.rhs).eval(env);
        case Kind::kDiv: {
            Rational divisor = Expr(n.rhs).eval(env);
            if (divisor == 0) throw PoleError("division by zero in parameter expression");
            return Expr(n.lhs).eval(env) / divisor;
        }
    }
    throw Error("unreachable expression kind");
}

Rational GammaTerm::eval(const Assignment& env) const {
    if (numerator.size() != denominator.size())
        throw RestrictionError("gamma term needs equally many numerator and denominator gammas");
    std::vector<Rational> nums, dens;
    for (const auto& e : numerator) nums.push_back(e.eval(env));
    for (const auto& e : denominator) dens.push_back(e.eval(env));

    std::vector<bool> used(dens.size(), false);
    Rational result(1);
    for (const auto& a : nums) {
        bool matched = false;
        for (std::size_t j = 0; j < dens.size(); ++j) {
            if (used[j] || !is_integer(a - dens[j])) continue;
            used[j] = true;
            result *= gamma_ratio(a, dens[j]);
            matched = true;
            break;
        }
        if (!matched)
            throw RestrictionError("gamma argument " + to_string(a) +
                                   " has no integer-difference partner");
    }
    return result;
}

}  // namespace hyperlab
