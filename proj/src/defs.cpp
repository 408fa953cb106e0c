#include "cotwist/defs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cotwist/errors.hpp"
#include "cotwist/expr.hpp"

namespace cotwist {

namespace {

struct Line {
    int number;
    std::vector<std::string> words;  // words before '='
    std::string value;               // text after '=' (may be empty)
};

[[noreturn]] void failAt(const Line& line, const std::string& what) {
    throw UsageError("defs line " + std::to_string(line.number) + ": " + what);
}

std::vector<Line> splitLines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::string head = raw;
        std::string value;
        if (auto eq = raw.find('='); eq != std::string::npos) {
            head = raw.substr(0, eq);
            value = raw.substr(eq + 1);
        }
        Line line{number, {}, value};
        std::istringstream hs(head);
        std::string w;
        while (hs >> w) line.words.push_back(w);
        if (line.words.empty()) {
            if (!value.empty()) throw UsageError("defs line " + std::to_string(number) +
                                                 ": '=' without a keyword");
            continue;
        }
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace

Definition parseDefs(const std::string& text, int order_override) {
    std::vector<Line> lines = splitLines(text);
    auto collect = [&](const std::string& key) {
        std::vector<const Line*> out;
        for (const auto& l : lines)
            if (l.words[0] == key) out.push_back(&l);
        return out;
    };
    static const std::vector<std::string> known = {"params",      "order",  "generators",
                                                   "bracket",     "coordinates", "action",
                                                   "twist",       "fentry", "term"};
    for (const auto& l : lines)
        if (std::find(known.begin(), known.end(), l.words[0]) == known.end())
            failAt(l, "unknown keyword '" + l.words[0] + "'");

    // scalars
    std::vector<std::string> params;
    for (const Line* l : collect("params"))
        for (size_t k = 1; k < l->words.size(); ++k) params.push_back(l->words[k]);
    int order = 4;
    for (const Line* l : collect("order")) {
        if (l->words.size() != 2) failAt(*l, "expected 'order N'");
        try {
            order = std::stoi(l->words[1]);
        } catch (const std::exception&) {
            failAt(*l, "order is not an integer");
        }
        if (order < 0) failAt(*l, "order must be nonnegative");
    }
    if (order_override >= 0) order = order_override;
    ContextPtr ctx = makeContext(params, order);

    // Lie algebra
    std::vector<std::string> generators;
    for (const Line* l : collect("generators"))
        for (size_t k = 1; k < l->words.size(); ++k) generators.push_back(l->words[k]);
    LiePresentation pres(ctx, generators);
    {
        // brackets need a bare algebra (no structure constants yet) to parse
        LiePtr flat = makeLie(LiePresentation(ctx, generators));
        for (const Line* l : collect("bracket")) {
            if (l->words.size() != 3) failAt(*l, "expected 'bracket A B = expr'");
            int i = pres.indexOf(l->words[1]);
            int j = pres.indexOf(l->words[2]);
            if (i < 0 || j < 0) failAt(*l, "unknown generator in bracket");
            UeaElement v = parseUea(l->value, flat);
            for (const auto& [m, s] : v.terms()) {
                if (totalDegree(m) != 1)
                    failAt(*l, "bracket value must be linear in the generators");
                for (size_t g = 0; g < m.size(); ++g)
                    if (m[g] == 1) pres.setBracket(i, j, static_cast<int>(g), s);
            }
        }
    }
    LiePtr alg = makeLie(std::move(pres));
    HopfPtr hopf = makeHopf(alg);

    // module algebra
    std::vector<std::string> coordNames;
    for (const Line* l : collect("coordinates"))
        for (size_t k = 1; k < l->words.size(); ++k) coordNames.push_back(l->words[k]);
    CoordPtr coords = makeCoords(ctx, coordNames);
    std::vector<std::vector<Poly>> values(
        alg->size(), std::vector<Poly>(coordNames.size(), Poly::zero(coords)));
    for (const Line* l : collect("action")) {
        if (l->words.size() != 3) failAt(*l, "expected 'action G X = expr'");
        int g = alg->indexOf(l->words[1]);
        int x = coords->indexOf(l->words[2]);
        if (g < 0) failAt(*l, "unknown generator '" + l->words[1] + "'");
        if (x < 0) failAt(*l, "unknown coordinate '" + l->words[2] + "'");
        values[g][x] = parsePoly(l->value, coords);
    }
    ActionSpec action;
    for (size_t g = 0; g < alg->size(); ++g) {
        DiffOperator op = DiffOperator::zero(coords);
        for (size_t x = 0; x < coordNames.size(); ++x)
            op += DiffOperator::multiplication(values[g][x])
                      .compose(DiffOperator::partial(coords, static_cast<int>(x)));
        action.generator_ops.push_back(op);
    }
    ModulePtr mod = makeModule(alg, coords, action);

    // twist
    Definition def(ctx, alg, hopf, coords, mod, TensorElement::unit(alg, 2));

    auto twists = collect("twist");
    if (twists.size() > 1) failAt(*twists[1], "multiple twist sections");
    std::string kind = "none";
    if (!twists.empty()) {
        if (twists[0]->words.size() != 2) failAt(*twists[0], "expected 'twist abelian|explicit'");
        kind = twists[0]->words[1];
    }
    auto fentries = collect("fentry");
    auto terms = collect("term");
    if (kind == "none") {
        if (!fentries.empty()) failAt(*fentries[0], "fentry outside a twist section");
        if (!terms.empty()) failAt(*terms[0], "term outside a twist section");
    } else if (kind == "abelian") {
        if (!terms.empty()) failAt(*terms[0], "term entries in an abelian twist");
        AbelianExpSpec spec;
        auto genIndex = [&](const std::string& name, const Line& l) {
            int g = alg->indexOf(name);
            if (g < 0) failAt(l, "unknown generator '" + name + "'");
            auto it = std::find(spec.generators.begin(), spec.generators.end(), g);
            if (it != spec.generators.end()) return static_cast<size_t>(it - spec.generators.begin());
            spec.generators.push_back(g);
            return spec.generators.size() - 1;
        };
        std::vector<std::tuple<size_t, size_t, Series>> entries;
        for (const Line* l : fentries) {
            if (l->words.size() != 3) failAt(*l, "expected 'fentry A B = expr'");
            size_t a = genIndex(l->words[1], *l);
            size_t b = genIndex(l->words[2], *l);
            entries.emplace_back(a, b, parseSeries(l->value, ctx));
        }
        size_t n = spec.generators.size();
        spec.coeff.assign(n, std::vector<Series>(n, Series::zero(ctx)));
        for (const auto& [a, b, v] : entries) {
            spec.coeff[a][b] += v;
            spec.coeff[b][a] -= v;
        }
        def.F = expandTwistTensor(spec, hopf);
        def.abelian = true;
        def.twist_generators = spec.generators;
        def.twist_coeff = spec.coeff;
    } else if (kind == "explicit") {
        if (!fentries.empty()) failAt(*fentries[0], "fentry entries in an explicit twist");
        ExplicitSeriesSpec spec;
        for (const Line* l : terms) {
            if (l->words.size() != 2) failAt(*l, "expected 'term K = expr'");
            int k = 0;
            try {
                k = std::stoi(l->words[1]);
            } catch (const std::exception&) {
                failAt(*l, "term order is not an integer");
            }
            spec.contributions.emplace_back(k, parseTensor(l->value, alg, 2));
        }
        def.F = expandTwistTensor(spec, hopf);
    } else {
        failAt(*twists[0], "twist kind must be 'abelian' or 'explicit'");
    }
    return def;
}

Definition loadDefs(const std::string& path, int order_override) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open defs file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseDefs(buf.str(), order_override);
}

TwistPtr Definition::twist() const {
    if (!cached_) cached_ = std::make_shared<const TwistData>(hopf, F);
    return cached_;
}

}  // namespace cotwist
