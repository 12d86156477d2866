#include <doctest.h>

#include "qhopf/qrat.hpp"

using namespace qhopf;

TEST_CASE("rational functions reduce to lowest terms") {
  const QRat q = QRat::q();
  const QRat one(1);
  const QRat x = (one - q * q) / (one + q);
  CHECK(x == one - q);
  CHECK(x.to_string() == "(1 - q)");
  CHECK(((one + q) / (one + q)).is_one());
  CHECK((q / q).is_one());
}

TEST_CASE("canonical text") {
  const QRat q = QRat::q();
  CHECK(q.inverse().to_string() == "q^-1");
  CHECK((QRat(-2) * q).to_string() == "-2 q");
  CHECK(QRat(mpq_class(1, 2)).to_string() == "1/2");
  CHECK(((q * q - QRat(1)) / q).to_string() == "(-1 + q^2)/(q)");
  CHECK(((QRat(1) - q * q) / (QRat(1) + q * q)).to_string() == "(1 - q^2)/(1 + q^2)");
  CHECK(QRat().to_string() == "0");
  CHECK(QRat(3).to_fraction_string() == "(3)/(1)");
  CHECK(q.pow(-2).to_fraction_string() == "(1)/(q^2)");
}

TEST_CASE("field operations") {
  const QRat q = QRat::q();
  const QRat a = (QRat(1) + q) / (QRat(2) - q * q * q);
  CHECK((a * a.inverse()).is_one());
  CHECK((a - a).is_zero());
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) * a.pow(2) == QRat(1));
  CHECK_THROWS_AS(QRat().inverse(), std::domain_error);
}

TEST_CASE("evaluation") {
  const QRat q = QRat::q();
  const QRat a = (QRat(1) - q * q) / q;
  CHECK(a.evaluate(0.5) == doctest::Approx(1.5));
  CHECK(a.evaluate(mpq_class(1, 3)) == mpq_class(8, 3));
}

TEST_CASE("polynomial gcd is monic") {
  const QPoly x = QPoly::monomial(1, 1);
  const QPoly a = (x + QPoly(1)) * (x + QPoly(2));
  const QPoly b = QPoly(3) * (x + QPoly(1)) * (x - QPoly(5));
  CHECK(QPoly::gcd(a, b) == x + QPoly(1));
  CHECK(QPoly::gcd(QPoly(), QPoly()).is_zero());
}
