#include "gridlift/exact.hpp"

#include <cctype>

namespace gridlift {

ExactRat make_rat(const ExactInt& num, const ExactInt& den)
{
    if (den == 0)
        throw Error("make_rat: zero denominator");
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

ExactInt floor(const ExactRat& q)
{
    ExactInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

ExactInt ceil(const ExactRat& q)
{
    ExactInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::size_t bit_length(const ExactInt& v)
{
    if (v == 0)
        return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::string to_string(const ExactInt& v) { return v.get_str(10); }

std::string to_string(const ExactRat& v) { return v.get_str(10); }

ExactInt parse_int(const std::string& text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size())
        throw Error("not an integer: '" + text + "'");
    for (std::size_t k = start; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw Error("not an integer: '" + text + "'");
    ExactInt v;
    v.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return v;
}

namespace {

int sgn(const ExactRat& v) { return ::sgn(v); }

}  // namespace

int orient2d(const Point2& p, const Point2& q, const Point2& r)
{
    ExactRat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

int orient2d(const IntPoint2& p, const IntPoint2& q, const IntPoint2& r)
{
    ExactInt det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return ::sgn(det);
}

ExactRat slope(const Point2& p, const Point2& q)
{
    if (p.x == q.x)
        throw VerticalEdge("slope of a vertical edge at x = " + to_string(p.x));
    ExactRat s = (q.y - p.y) / (q.x - p.x);
    return s;
}

ExactRat slope(const IntPoint2& p, const IntPoint2& q)
{
    if (p.x == q.x)
        throw VerticalEdge("slope of a vertical edge at x = " + to_string(p.x));
    return make_rat(q.y - p.y, q.x - p.x);
}

Plane plane_through(const Point3& p1, const Point3& p2, const Point3& p3)
{
    // Rows (x_j, y_j, 1); right-hand side z_j.
    auto det3 = [](const ExactInt& a, const ExactInt& b, const ExactInt& c,
                   const ExactInt& d, const ExactInt& e, const ExactInt& f,
                   const ExactInt& g, const ExactInt& h, const ExactInt& i) {
        return ExactInt(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g));
    };
    const ExactInt one = 1;
    ExactInt det = det3(p1.x, p1.y, one, p2.x, p2.y, one, p3.x, p3.y, one);
    if (det == 0)
        throw DegenerateFace("plane_through: collinear projections");
    ExactInt d1 = det3(p1.z, p1.y, one, p2.z, p2.y, one, p3.z, p3.y, one);
    ExactInt d2 = det3(p1.x, p1.z, one, p2.x, p2.z, one, p3.x, p3.z, one);
    ExactInt d3 = det3(p1.x, p1.y, p1.z, p2.x, p2.y, p2.z, p3.x, p3.y, p3.z);
    return {make_rat(d1, det), make_rat(d2, det), make_rat(d3, det)};
}

ExactRat eval_plane(const Plane& pl, const ExactInt& x, const ExactInt& y)
{
    ExactRat z = pl.c1 * x + pl.c2 * y + pl.c3;
    return z;
}

int side_of_plane(const Plane& pl, const Point3& p)
{
    ExactRat diff = ExactRat(p.z) - eval_plane(pl, p.x, p.y);
    return sgn(diff);
}

bool lex_yx_less(const IntPoint2& a, const IntPoint2& b)
{
    if (a.y != b.y)
        return a.y < b.y;
    return a.x < b.x;
}

}  // namespace gridlift
