#include "cotwist/corpus.hpp"

#include <random>

#include "cotwist/errors.hpp"

namespace cotwist {

namespace {

// Small nonzero Gaussian-rational coefficients keep the exact arithmetic
// cheap while still exercising the i-linear structure.
GaussianRational drawCoeff(std::mt19937_64& rng) {
    static const std::vector<GaussianRational> pool = {
        GaussianRational(1, 0),  GaussianRational(-1, 0), GaussianRational(2, 0),
        GaussianRational(-2, 0), GaussianRational(0, 1),  GaussianRational(0, -1),
        GaussianRational(1, 1),  GaussianRational(Rational(1) / 2, 0),
    };
    return pool[rng() % pool.size()];
}

Exponents drawExponents(std::mt19937_64& rng, size_t width, int degree) {
    Exponents e(width, 0);
    if (width == 0) return e;
    for (int k = 0; k < degree; ++k) ++e[rng() % width];
    return e;
}

}  // namespace

std::vector<UeaElement> ueaCorpus(const LiePtr& alg, size_t count, int max_degree,
                                  std::uint64_t seed) {
    if (max_degree < 0) throw UsageError("corpus degree must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<UeaElement> out;
    out.reserve(count);
    for (size_t n = 0; n < count; ++n) {
        UeaElement x = UeaElement::zero(alg);
        size_t nterms = 1 + rng() % 2;
        for (size_t t = 0; t < nterms; ++t) {
            int degree = static_cast<int>(rng() % (max_degree + 1));
            x.addTerm(drawExponents(rng, alg->size(), degree),
                      Series::constant(alg->ctx, drawCoeff(rng)));
        }
        if (x.isZero()) x = UeaElement::one(alg);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Poly> polyCorpus(const CoordPtr& coords, size_t count, int max_degree,
                             std::uint64_t seed) {
    if (max_degree < 0) throw UsageError("corpus degree must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<Poly> out;
    out.reserve(count);
    for (size_t n = 0; n < count; ++n) {
        Poly p = Poly::zero(coords);
        size_t nterms = 1 + rng() % 2;
        for (size_t t = 0; t < nterms; ++t) {
            int degree = static_cast<int>(rng() % (max_degree + 1));
            p.addTerm(drawExponents(rng, coords->coords.size(), degree),
                      Series::constant(coords->ctx, drawCoeff(rng)));
        }
        if (p.isZero()) p = Poly::one(coords);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<SmashElement> smashCorpus(const ModulePtr& mod, size_t count, int max_degree,
                                      std::uint64_t seed) {
    if (max_degree < 0) throw UsageError("corpus degree must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<SmashElement> out;
    out.reserve(count);
    for (size_t n = 0; n < count; ++n) {
        SmashElement x = SmashElement::zero(mod);
        size_t nterms = 1 + rng() % 2;
        for (size_t t = 0; t < nterms; ++t) {
            int degree = static_cast<int>(rng() % (max_degree + 1));
            int hdeg = degree == 0 ? 0 : static_cast<int>(rng() % (degree + 1));
            SmashElement::Key k{drawExponents(rng, mod->coords->coords.size(), degree - hdeg),
                                drawExponents(rng, mod->lie->size(), hdeg)};
            x.addTerm(k, Series::constant(mod->coords->ctx, drawCoeff(rng)));
        }
        if (x.isZero()) x = SmashElement::one(mod);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace cotwist
