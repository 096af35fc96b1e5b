#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wxz/expr.hpp"

using namespace wxz;

TEST_CASE("parse and evaluate") {
    Assignment env{{"r", Scalar(2)}, {"s", Scalar(Rational(1, 3))}, {"a", Scalar(Rational(-1, 2))}};
    CHECK(Expr::parse("1-r*s").eval(env) == Scalar(Rational(1, 3)));
    CHECK(Expr::parse("r^-1").eval(env) == Scalar(Rational(1, 2)));
    CHECK(Expr::parse("r-r^-1+2").eval(env) == Scalar(Rational(7, 2)));
    CHECK(Expr::parse("(s+1)/(a^2*s^2)-1").eval(env) == Scalar(47));
    CHECK(Expr::parse("-a").eval(env) == Scalar(Rational(1, 2)));
    CHECK(Expr::parse("i*i").eval(env) == Scalar(-1));
    CHECK(Expr::parse("sqrt(4)").eval(env) == Scalar(2));
    CHECK(Expr::parse("2*(i+1)*r").eval(env) == Scalar(Rational(4), Rational(4)));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(Expr::parse("1+"), ParseError);
    CHECK_THROWS_AS(Expr::parse("(1"), ParseError);
    CHECK_THROWS_AS(Expr::parse("q q"), ParseError);
    CHECK_THROWS_AS(Expr::parse("x").eval({}), IncompleteAssignment);
    CHECK_THROWS_AS(Expr::parse("1/x").eval({{"x", Scalar(0)}}), DivisionByZero);
}

TEST_CASE("print and reparse") {
    Assignment env{{"b", Scalar(3)}, {"eps", Scalar(-1)}};
    for (const char* text : {"1-b^2", "sqrt((1-b)/(eps*b))", "-(b+i)/2", "eps*b*i", "(0-5/2)"}) {
        Expr e = Expr::parse(text);
        Expr round = Expr::parse(e.str());
        CHECK(round.eval(env) == e.eval(env));
    }
}

TEST_CASE("collected parameters") {
    std::set<std::string> ps;
    Expr::parse("sqrt(a)*b/(c-1)+i").collect_params(ps);
    CHECK(ps == std::set<std::string>{"a", "b", "c"});
}
