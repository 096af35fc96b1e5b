#include "wxz/expr.hpp"

#include <cctype>
#include <sstream>

namespace wxz {

struct Expr::Node {
    enum class Kind { Const, Param, Add, Sub, Mul, Div, Neg, Sqrt, Pow };
    Kind kind;
    Scalar value;                 // Const
    std::string name;             // Param
    std::shared_ptr<const Node> lhs, rhs;
    long exponent = 0;            // Pow
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(Expr::Node n) { return std::make_shared<const Expr::Node>(std::move(n)); }

Scalar eval_node(const Expr::Node& n, const Assignment& env) {
    using K = Expr::Node::Kind;
    switch (n.kind) {
        case K::Const: return n.value;
        case K::Param: {
            auto it = env.find(n.name);
            if (it == env.end()) throw IncompleteAssignment(n.name);
            return it->second;
        }
        case K::Add: return eval_node(*n.lhs, env) + eval_node(*n.rhs, env);
        case K::Sub: return eval_node(*n.lhs, env) - eval_node(*n.rhs, env);
        case K::Mul: return eval_node(*n.lhs, env) * eval_node(*n.rhs, env);
        case K::Div: return eval_node(*n.lhs, env) / eval_node(*n.rhs, env);
        case K::Neg: return -eval_node(*n.lhs, env);
        case K::Sqrt: return scalar_sqrt(eval_node(*n.lhs, env));
        case K::Pow: return eval_node(*n.lhs, env).pow(n.exponent);
    }
    throw Error("bad expression node");
}

void collect_node(const Expr::Node& n, std::set<std::string>& out) {
    using K = Expr::Node::Kind;
    if (n.kind == K::Param) out.insert(n.name);
    if (n.lhs) collect_node(*n.lhs, out);
    if (n.rhs) collect_node(*n.rhs, out);
}

void print_const(const Scalar& v, std::ostringstream& os) {
    // printed form must be re-parseable and stable under reprinting
    if (!v.is_exact()) throw Error("cannot print an approximate constant expression");
    const Rational& re = v.exact_re();
    const Rational& im = v.exact_im();
    if (sgn(re) == 0 && im == 1) {
        os << "i";
        return;
    }
    if (sgn(im) == 0) {
        if (sgn(re) < 0) os << "(0-" << rational_to_string(-re) << ")";
        else os << rational_to_string(re);
        return;
    }
    os << "(" << rational_to_string(re);
    if (sgn(im) < 0) os << "-" << rational_to_string(-im) << "*i)";
    else os << "+" << rational_to_string(im) << "*i)";
}

void print_node(const Expr::Node& n, std::ostringstream& os) {
    using K = Expr::Node::Kind;
    switch (n.kind) {
        case K::Const: print_const(n.value, os); return;
        case K::Param: os << n.name; return;
        case K::Add: os << "("; print_node(*n.lhs, os); os << "+"; print_node(*n.rhs, os); os << ")"; return;
        case K::Sub: os << "("; print_node(*n.lhs, os); os << "-"; print_node(*n.rhs, os); os << ")"; return;
        case K::Mul: os << "("; print_node(*n.lhs, os); os << "*"; print_node(*n.rhs, os); os << ")"; return;
        case K::Div: os << "("; print_node(*n.lhs, os); os << "/"; print_node(*n.rhs, os); os << ")"; return;
        case K::Neg: os << "(-"; print_node(*n.lhs, os); os << ")"; return;
        case K::Sqrt: os << "sqrt("; print_node(*n.lhs, os); os << ")"; return;
        case K::Pow: os << "("; print_node(*n.lhs, os); os << ")^" << n.exponent; return;
    }
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr lhs = term();
        while (true) {
            if (eat('+')) {
                Expr::Node n{Expr::Node::Kind::Add, Scalar(), "", lhs, term(), 0};
                lhs = make_node(std::move(n));
            } else if (eat('-')) {
                Expr::Node n{Expr::Node::Kind::Sub, Scalar(), "", lhs, term(), 0};
                lhs = make_node(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (true) {
            if (eat('*')) {
                Expr::Node n{Expr::Node::Kind::Mul, Scalar(), "", lhs, factor(), 0};
                lhs = make_node(std::move(n));
            } else if (eat('/')) {
                Expr::Node n{Expr::Node::Kind::Div, Scalar(), "", lhs, factor(), 0};
                lhs = make_node(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    NodePtr factor() {
        if (eat('-')) {
            Expr::Node n{Expr::Node::Kind::Neg, Scalar(), "", factor(), nullptr, 0};
            return make_node(std::move(n));
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            std::size_t start = pos_;
            long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            if (pos_ == start) throw ParseError("expected integer exponent", pos_);
            Expr::Node n{Expr::Node::Kind::Pow, Scalar(), "", base, nullptr, neg ? -e : e};
            return make_node(std::move(n));
        }
        return base;
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                digits.push_back(s_[pos_++]);
            }
            Expr::Node n{Expr::Node::Kind::Const, Scalar(rational_from_string(digits)), "", nullptr, nullptr, 0};
            return make_node(std::move(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                name.push_back(s_[pos_++]);
            }
            if (name == "sqrt") {
                if (!eat('(')) throw ParseError("expected '(' after sqrt", pos_);
                NodePtr arg = expr();
                if (!eat(')')) throw ParseError("expected ')'", pos_);
                Expr::Node n{Expr::Node::Kind::Sqrt, Scalar(), "", arg, nullptr, 0};
                return make_node(std::move(n));
            }
            if (name == "i") {
                Expr::Node n{Expr::Node::Kind::Const, Scalar::i(), "", nullptr, nullptr, 0};
                return make_node(std::move(n));
            }
            Expr::Node n{Expr::Node::Kind::Param, Scalar(), name, nullptr, nullptr, 0};
            return make_node(std::move(n));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

} // namespace

Expr Expr::constant(const Scalar& v) {
    Node n{Node::Kind::Const, v, "", nullptr, nullptr, 0};
    return Expr(make_node(std::move(n)));
}

Expr Expr::param(const std::string& name) {
    Node n{Node::Kind::Param, Scalar(), name, nullptr, nullptr, 0};
    return Expr(make_node(std::move(n)));
}

Expr Expr::parse(const std::string& text) {
    Parser p(text);
    return Expr(p.parse());
}

Scalar Expr::eval(const Assignment& env) const {
    if (!node_) throw Error("empty expression");
    return eval_node(*node_, env);
}

void Expr::collect_params(std::set<std::string>& out) const {
    if (node_) collect_node(*node_, out);
}

std::string Expr::str() const {
    if (!node_) return "";
    std::ostringstream os;
    print_node(*node_, os);
    return os.str();
}

} // namespace wxz
