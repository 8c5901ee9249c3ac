#include <regex>

#include "wmin/errors.hpp"
#include "wmin/spec.hpp"

namespace wmin {

std::string AlgebraSpec::name() const {
    switch (family) {
        case Family::SL2m:
            return "sl(2|" + std::to_string(m) + ")";
        case Family::PSL22:
            return "psl(2|2)";
        case Family::SPO2m:
            return "spo(2|" + std::to_string(m) + ")";
        case Family::OSP4m:
            return "osp(4|" + std::to_string(m) + ")";
        case Family::D21a:
            return "D(2,1;a=" + a.to_string() + ")";
        case Family::F4:
            return "F(4)";
        case Family::G3:
            return "G(3)";
    }
    throw InternalError("unreachable family");
}

namespace {

int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw ParseError("trailing characters in integer");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("bad integer '" + s + "'");
    }
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text) {
    static const std::regex sl_re(R"(^sl\(2\|(\d+)\)$)");
    static const std::regex spo_re(R"(^spo\(2\|(\d+)\)$)");
    static const std::regex osp_re(R"(^osp\(4\|(\d+)\)$)");
    static const std::regex d21_re(R"(^D\(2,1;a=(-?\d+(?:/\d+)?)\)$)");

    std::smatch m;
    AlgebraSpec out;
    if (text == "psl(2|2)") {
        out.family = Family::PSL22;
        out.m = 2;
        return out;
    }
    if (text == "F(4)") {
        out.family = Family::F4;
        return out;
    }
    if (text == "G(3)") {
        out.family = Family::G3;
        return out;
    }
    if (std::regex_match(text, m, sl_re)) {
        out.family = Family::SL2m;
        out.m = parse_int(m[1].str());
        if (out.m < 3)
            throw UnsupportedParameter("sl(2|m) requires m >= 3; use psl(2|2) for m = 2");
        return out;
    }
    if (std::regex_match(text, m, spo_re)) {
        out.family = Family::SPO2m;
        out.m = parse_int(m[1].str());
        return out;
    }
    if (std::regex_match(text, m, osp_re)) {
        out.family = Family::OSP4m;
        out.m = parse_int(m[1].str());
        if (out.m <= 2 || out.m % 2 != 0)
            throw UnsupportedParameter("osp(4|m) requires even m > 2");
        return out;
    }
    if (std::regex_match(text, m, d21_re)) {
        out.family = Family::D21a;
        out.a = Rational(m[1].str());
        if (out.a == Rational(0) || out.a == Rational(-1))
            throw UnsupportedParameter("D(2,1;a) requires a outside {0,-1}");
        return out;
    }
    throw ParseError("unrecognized algebra '" + text + "'");
}

}  // namespace wmin
