#ifndef GRIDLIFT_EXACT_HPP
#define GRIDLIFT_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gridlift {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VerticalEdge : public Error {
public:
    using Error::Error;
};

class DegenerateFace : public Error {
public:
    using Error::Error;
};

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Builds num/den in canonical form. Throws if den == 0.
ExactRat make_rat(const ExactInt& num, const ExactInt& den = 1);

ExactInt floor(const ExactRat& q);
ExactInt ceil(const ExactRat& q);

/// Number of bits of |v| (0 for v == 0).
std::size_t bit_length(const ExactInt& v);

std::string to_string(const ExactInt& v);
std::string to_string(const ExactRat& v);

/// Parses an optionally signed decimal integer of arbitrary length.
ExactInt parse_int(const std::string& text);

struct Point2 {
    ExactRat x;
    ExactRat y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct IntPoint2 {
    ExactInt x;
    ExactInt y;

    Point2 rational() const { return {ExactRat(x), ExactRat(y)}; }

    friend bool operator==(const IntPoint2&, const IntPoint2&) = default;
};

struct Point3 {
    ExactInt x;
    ExactInt y;
    ExactInt z;

    friend bool operator==(const Point3&, const Point3&) = default;
};

/// Non-vertical plane z = c1*x + c2*y + c3.
struct Plane {
    ExactRat c1;
    ExactRat c2;
    ExactRat c3;

    friend bool operator==(const Plane&, const Plane&) = default;
};

/// Sign of the signed area of pqr: +1 counterclockwise, -1 clockwise, 0 collinear.
int orient2d(const Point2& p, const Point2& q, const Point2& r);
int orient2d(const IntPoint2& p, const IntPoint2& q, const IntPoint2& r);

/// Slope of the segment pq. Throws VerticalEdge when x(p) == x(q).
ExactRat slope(const Point2& p, const Point2& q);
ExactRat slope(const IntPoint2& p, const IntPoint2& q);

/// Plane through three points whose xy-projections are not collinear
/// (Cramer's rule). Throws DegenerateFace otherwise.
Plane plane_through(const Point3& p1, const Point3& p2, const Point3& p3);

ExactRat eval_plane(const Plane& pl, const ExactInt& x, const ExactInt& y);

/// Sign of z - plane(x, y) for the point (x, y, z).
int side_of_plane(const Plane& pl, const Point3& p);

/// Lexicographic order with y taking precedence (y first, then x).
bool lex_yx_less(const IntPoint2& a, const IntPoint2& b);

}  // namespace gridlift

#endif  // GRIDLIFT_EXACT_HPP
