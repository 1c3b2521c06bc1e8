#include "normone/serialize.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace normone {

using json = nlohmann::ordered_json;

namespace {

std::string int_str(const Int& v) { return v.str(); }

Int int_from_json(const json& j, const char* what) {
    try {
        if (j.is_number_integer()) return Int(j.get<long long>());
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::exception&) {
        throw ParameterError(std::string(what) + ": not a valid integer: " + j.dump());
    }
    throw ParameterError(std::string(what) + ": expected an integer or decimal string, got " +
                         j.dump());
}

json poly_to_obj(const Poly& P) {
    json terms = json::array();
    for (const Poly::Term& t : P.terms()) {
        json w = json::array();
        for (Letter l : t.word) w.push_back(static_cast<std::uint32_t>(l));
        terms.push_back({{"c", int_str(t.coeff)}, {"w", std::move(w)}});
    }
    return {{"p", P.ctx().p()}, {"n", P.ctx().n()}, {"terms", std::move(terms)}};
}

Poly poly_from_obj(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("terms"))
        throw ParameterError("polynomial document needs fields p, n, terms");
    if (!j["p"].is_number_integer() || !j["n"].is_number_integer())
        throw ParameterError("polynomial fields p and n must be integers");
    GroupContext ctx(j["p"].get<int>(), j["n"].get<int>());
    if (!j["terms"].is_array()) throw ParameterError("polynomial field terms must be an array");
    std::vector<Poly::Term> terms;
    terms.reserve(j["terms"].size());
    std::size_t idx = 0;
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("c") || !t.contains("w") || !t["w"].is_array())
            throw ParameterError("term " + std::to_string(idx) +
                                 " must be an object with fields c and w");
        Word w;
        for (const json& l : t["w"]) {
            if (!l.is_number_integer() || l.get<long long>() < 0 ||
                l.get<long long>() >= ctx.order())
                throw ParameterError("term " + std::to_string(idx) + ": letter " + l.dump() +
                                     " outside group of order " + std::to_string(ctx.order()));
            w.push_back(static_cast<Letter>(l.get<std::uint32_t>()));
        }
        terms.push_back({std::move(w), int_from_json(t["c"], "term coefficient")});
        ++idx;
    }
    return Poly::from_terms(ctx, std::move(terms));
}

json parse_document(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.what() carries the byte offset of the failure.
        throw ParameterError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

std::string poly_to_json(const Poly& P) { return poly_to_obj(P).dump(); }

Poly poly_from_json(const std::string& text) {
    return poly_from_obj(parse_document(text, "polynomial"));
}

// --- text form ---------------------------------------------------------------

namespace {

void append_term_text(std::string& out, const Poly::Term& t, bool first) {
    Int c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    const bool show_coeff = t.word.empty() || c != 1;
    if (show_coeff) out += int_str(c);
    for (std::size_t i = 0; i < t.word.size(); ++i) {
        if (i > 0 || show_coeff) out += "*";
        out += "s" + std::to_string(static_cast<std::uint32_t>(t.word[i])) + "(x)";
    }
}

}  // namespace

std::string poly_to_text(const Poly& P) {
    if (P.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Poly::Term& t : P.terms()) {
        append_term_text(out, t, first);
        first = false;
    }
    return out;
}

namespace {

struct TextParser {
    const GroupContext& ctx;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParameterError("text polynomial, offset " + std::to_string(pos) + ": " + why);
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Int(s.substr(start, pos - start));
    }
    bool at_factor() {
        skip_ws();
        return pos < s.size() && s[pos] == 's';
    }
    Letter factor() {
        if (!eat('s')) fail("expected generator factor sJ(x)");
        Int j = integer();
        if (j >= ctx.order()) fail("generator index " + int_str(j) + " outside group");
        if (!eat('(') || !eat('x') || !eat(')')) fail("expected (x) after generator index");
        return static_cast<Letter>(j.convert_to<std::uint32_t>());
    }

    Poly run() {
        std::vector<Poly::Term> terms;
        skip_ws();
        if (pos == s.size()) fail("empty input");
        bool first = true;
        while (true) {
            skip_ws();
            if (pos == s.size()) break;
            Int sign = 1;
            if (eat('+')) {
                if (first) fail("leading +");
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                fail("expected + or - between terms");
            }
            skip_ws();
            Int coeff = 1;
            bool saw_coeff = false;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coeff = integer();
                saw_coeff = true;
            }
            Word w;
            if (saw_coeff ? eat('*') : at_factor()) {
                w.push_back(factor());
                while (eat('*')) w.push_back(factor());
            } else if (!saw_coeff) {
                fail("expected coefficient or generator factor");
            }
            terms.push_back({std::move(w), sign * coeff});
            first = false;
        }
        // "0" parses as the zero polynomial via coefficient canonicalization.
        return Poly::from_terms(ctx, std::move(terms));
    }
};

}  // namespace

Poly poly_from_text(const GroupContext& ctx, const std::string& text) {
    TextParser p{ctx, text};
    return p.run();
}

// --- LaTeX -------------------------------------------------------------------

namespace {

std::string latex_factor(std::uint32_t j) {
    if (j == 0) return "x";
    if (j == 1) return "\\sigma(x)";
    return "\\sigma^{" + std::to_string(j) + "}(x)";
}

}  // namespace

std::string poly_to_latex(const Poly& P) {
    if (P.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Poly::Term& t : P.terms()) {
        Int c = t.coeff;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (t.word.empty() || c != 1) out += int_str(c);
        std::size_t i = 0;
        while (i < t.word.size()) {
            std::size_t run = i;
            while (run < t.word.size() && t.word[run] == t.word[i]) ++run;
            out += latex_factor(static_cast<std::uint32_t>(t.word[i]));
            if (run - i > 1) out += "^{" + std::to_string(run - i) + "}";
            i = run;
        }
        first = false;
    }
    return out;
}

// --- operators ----------------------------------------------------------------

std::string operator_to_json(const Operator& op) {
    json arr = json::array();
    for (const auto& [e, c] : op.terms()) {
        json entry;
        // Plain JSON number when it fits exactly, decimal string otherwise.
        if (c >= -(Int(1) << 53) && c <= (Int(1) << 53))
            entry["c"] = c.convert_to<long long>();
        else
            entry["c"] = int_str(c);
        entry["e"] = e;
        arr.push_back(std::move(entry));
    }
    return json{{"op", std::move(arr)}}.dump();
}

Operator operator_from_json(const GroupContext& ctx, const std::string& text) {
    json j = parse_document(text, "operator");
    if (!j.is_object() || !j.contains("op") || !j["op"].is_array())
        throw ParameterError("operator document needs an op array");
    std::vector<std::pair<std::uint32_t, Int>> terms;
    for (const json& t : j["op"]) {
        if (!t.is_object() || !t.contains("c") || !t.contains("e") ||
            !t["e"].is_number_integer())
            throw ParameterError("operator entries need integer e and coefficient c");
        long long e = t["e"].get<long long>();
        if (e < 0 || e >= ctx.order())
            throw ParameterError("operator exponent " + std::to_string(e) +
                                 " outside group of order " + std::to_string(ctx.order()));
        terms.push_back({static_cast<std::uint32_t>(e), int_from_json(t["c"], "operator coefficient")});
    }
    return Operator::from_terms(ctx, std::move(terms));
}

// --- instances ----------------------------------------------------------------

std::string instance_to_json(const InstanceSpec& inst) {
    json values = json::array();
    for (const SquareMat& m : inst.values) {
        json rows = json::array();
        for (int r = 0; r < m.dim; ++r) {
            json row = json::array();
            for (int c = 0; c < m.dim; ++c) row.push_back(int_str(m.at(r, c)));
            rows.push_back(std::move(row));
        }
        values.push_back(std::move(rows));
    }
    return json{{"p", inst.ctx.p()},
                {"n", inst.ctx.n()},
                {"kind", inst.kind == InstanceKind::Scalar ? "scalar" : "matrix"},
                {"dim", inst.dim},
                {"seed", std::to_string(inst.seed)},
                {"bound", inst.bound},
                {"values", std::move(values)}}
        .dump();
}

InstanceSpec instance_from_json(const std::string& text) {
    json j = parse_document(text, "instance");
    for (const char* field : {"p", "n", "kind", "dim", "seed", "bound", "values"})
        if (!j.contains(field))
            throw ParameterError(std::string("instance document needs field ") + field);
    GroupContext ctx(j["p"].get<int>(), j["n"].get<int>());
    std::string kind_name = j["kind"].get<std::string>();
    if (kind_name != "scalar" && kind_name != "matrix")
        throw ParameterError("instance kind must be scalar or matrix, got " + kind_name);
    InstanceSpec inst{ctx,
                      kind_name == "scalar" ? InstanceKind::Scalar : InstanceKind::Matrix,
                      j["dim"].get<int>(),
                      0,
                      j["bound"].get<int>(),
                      {}};
    if (inst.dim < 1) throw ParameterError("instance dimension must be >= 1");
    if (j["seed"].is_string())
        inst.seed = std::stoull(j["seed"].get<std::string>());
    else
        inst.seed = j["seed"].get<std::uint64_t>();
    if (!j["values"].is_array() || j["values"].size() != ctx.order())
        throw ParameterError("instance needs one value per group element");
    for (const json& rows : j["values"]) {
        SquareMat m = SquareMat::zero(inst.dim);
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(inst.dim))
            throw ParameterError("instance value must be a dim x dim matrix");
        for (int r = 0; r < inst.dim; ++r) {
            if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(inst.dim))
                throw ParameterError("instance value must be a dim x dim matrix");
            for (int c = 0; c < inst.dim; ++c)
                m.at(r, c) = int_from_json(rows[r][c], "instance entry");
        }
        inst.values.push_back(std::move(m));
    }
    return inst;
}

// --- reports -------------------------------------------------------------------

std::string replay_report_to_json(const ReplayReport& rep) {
    json arr = json::array();
    for (const IdentityCheck& c : rep.checks)
        arr.push_back({{"eq", c.name}, {"ok", c.ok}, {"residual_terms", c.residual_terms}});
    return arr.dump();
}

std::string step_check_name(StepCheck c) {
    switch (c) {
        case StepCheck::None: return "none";
        case StepCheck::Certificate: return "certificate";
        case StepCheck::Oracle: return "oracle";
    }
    return "none";
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Unit: return "unit";
        case Strategy::Doubling: return "doubling";
        case Strategy::Explicit: return "steps";
    }
    return "steps";
}

std::string chain_to_json(const Chain& chain, bool include_polys) {
    json steps = json::array();
    for (const LiftStep& s : chain.steps) {
        json step{{"m", s.m},
                  {"k", s.k},
                  {"expanded", s.expanded},
                  {"step_monomials", s.step_monomials},
                  {"bound", int_str(s.bound)},
                  {"verified_by", step_check_name(s.verified_by)}};
        if (s.expanded) {
            step["output_monomials"] = s.output->term_count();
            if (include_polys) {
                step["defect"] = poly_to_obj(*s.defect);
                step["witness"] = poly_to_obj(*s.witness);
                step["multiplier"] = poly_to_obj(*s.multiplier);
                step["output"] = poly_to_obj(*s.output);
            }
        }
        steps.push_back(std::move(step));
    }
    json doc{{"p", chain.ctx.p()}, {"n", chain.ctx.n()}, {"steps", std::move(steps)}};
    doc["final"] = chain.final ? poly_to_obj(*chain.final) : json(nullptr);
    return doc.dump();
}

}  // namespace normone
