// Development search: find the double point p3 = <X1 - 3 X2 - 2 X0, (X2 - c X0)^2>
// making the four-component configuration lie on a pencil of cubics.
#include <iostream>

#include "klab/io.hpp"
#include "klab/parse.hpp"

using namespace klab;

int main() {
    FieldSpec f{0};
    RingPtr proj = Ring::projective(2, f);
    RingPtr aff = Ring::affine(2, f);

    auto affine_ideal = [&](std::vector<std::string> gens) {
        std::vector<Polynomial> ps;
        for (const auto& g : gens) ps.push_back(parse_polynomial(g, proj).dehomogenized());
        return Ideal(aff, std::move(ps));
    };

    AffineCoordinates p4;
    p4.build(affine_ideal({"X0^2*X1 - X2^3", "X1^2 - X0*X2 - X2^2", "X0^3 + X0^2*X2 - X1*X2^2"}));

    std::vector<Monomial> cubics = monomials_of_degree(proj, 3);
    std::vector<Scalar> pt1{Scalar::from_int(1, f), Scalar::from_int(0, f), Scalar::from_int(0, f)};
    std::vector<Scalar> pt2{Scalar::from_int(1, f), Scalar::from_int(8, f), Scalar::from_int(2, f)};

    for (long num = -12; num <= 12; ++num) {
        for (long den = 1; den <= 4; ++den) {
            Scalar c = Scalar::rational(num, den);
            if (c == Scalar::from_int(2, f)) continue;  // collides with p2
            // local ring of the double point on the line X1 = 3 X2 + 2 X0
            Polynomial l1 = parse_polynomial("X1 - 3*X2 - 2*X0", proj).dehomogenized();
            Polynomial x2 = Polynomial::variable(aff, 1);
            Polynomial lc = x2 - Polynomial::constant(aff, c);
            AffineCoordinates p3;
            p3.build(Ideal(aff, {l1, lc * lc}));
            if (p3.dimension() != 2) continue;

            Matrix conditions(0, cubics.size(), f);
            Vec row1(cubics.size(), Scalar::zero(f)), row2 = Vec(cubics.size(), Scalar::zero(f));
            for (std::size_t j = 0; j < cubics.size(); ++j) {
                Polynomial mono = Polynomial::monomial(proj, cubics[j], Scalar::one(f));
                row1[j] = mono.evaluate(pt1);
                row2[j] = mono.evaluate(pt2);
            }
            conditions.append_row(row1);
            conditions.append_row(row2);
            for (int r = 0; r < 2; ++r) {
                Vec row(cubics.size(), Scalar::zero(f));
                for (std::size_t j = 0; j < cubics.size(); ++j) {
                    Polynomial mono = Polynomial::monomial(proj, cubics[j], Scalar::one(f));
                    row[j] = p3.coords(mono.dehomogenized())[r];
                }
                conditions.append_row(row);
            }
            for (int r = 0; r < 5; ++r) {
                Vec row(cubics.size(), Scalar::zero(f));
                for (std::size_t j = 0; j < cubics.size(); ++j) {
                    Polynomial mono = Polynomial::monomial(proj, cubics[j], Scalar::one(f));
                    row[j] = p4.coords(mono.dehomogenized())[r];
                }
                conditions.append_row(row);
            }
            std::size_t rank = conditions.rank();
            if (rank <= 8)
                std::cout << "c = " << c.to_string() << "  rank " << rank << "  -> dim cubics "
                          << (10 - rank) << "\n";
        }
    }
    return 0;
}
