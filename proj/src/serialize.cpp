#include "balcube/serialize.hpp"

#include <stdexcept>

namespace balcube {

namespace {

std::uint64_t parse_hex_word(const std::string& text) {
    if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
        throw std::invalid_argument("family_from_json: hex word must look like 0x1A");
    std::uint64_t bits = 0;
    for (std::size_t i = 2; i < text.size(); ++i) {
        const char c = text[i];
        int digit = 0;
        if (c >= '0' && c <= '9')
            digit = c - '0';
        else if (c >= 'a' && c <= 'f')
            digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            digit = c - 'A' + 10;
        else
            throw std::invalid_argument("family_from_json: bad hex digit");
        if (bits >> 60) throw std::overflow_error("family_from_json: hex word exceeds 64 bits");
        bits = (bits << 4) | static_cast<std::uint64_t>(digit);
    }
    return bits;
}

}  // namespace

Json family_members_json(const Family& f, bool hex) {
    Json arr = Json::array();
    for (VertexSet x : f) {
        if (hex) {
            arr.push_back(to_hex(x));
        } else {
            Json elements = Json::array();
            for (std::uint64_t b = x.bits; b != 0; b &= b - 1)
                elements.push_back(std::countr_zero(b) + 1);
            arr.push_back(std::move(elements));
        }
    }
    return arr;
}

Json family_to_json(const Family& f, bool hex) {
    Json j;
    j["n"] = f.ground();
    j[hex ? "hex" : "sets"] = family_members_json(f, hex);
    return j;
}

Family family_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::vector<VertexSet> members;
    if (j.contains("sets")) {
        for (const auto& set : j.at("sets")) {
            VertexSet x;
            for (const auto& e : set) x.bits |= 1ull << (e.get<int>() - 1);
            members.push_back(x);
        }
    } else if (j.contains("hex")) {
        for (const auto& word : j.at("hex")) members.push_back(VertexSet{parse_hex_word(word.get<std::string>())});
    } else {
        throw std::invalid_argument("family_from_json: expected a \"sets\" or \"hex\" field");
    }
    return Family(n, std::move(members));
}

Json pair_to_json(const ExtremalPair& pair, bool hex) {
    Json j;
    j["n"] = pair.n;
    j["case"] = pair.residue;
    j["A"] = family_members_json(pair.even_half, hex);
    j["B"] = family_members_json(pair.odd_half, hex);
    j["size"] = pair.size();
    return j;
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["subject"] = report.subject;
    j["pass"] = report.all_pass();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json entry;
        entry["check"] = c.name;
        entry["status"] = c.pass ? "pass" : "fail";
        if (c.m) entry["m"] = *c.m;
        if (c.measured) entry["measured"] = *c.measured;
        if (c.bound) entry["bound"] = *c.bound;
        if (!c.detail.empty()) entry["detail"] = c.detail;
        if (!c.witness.empty()) entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json search_to_json(const SearchResult& result, bool include_witness) {
    Json j;
    j["n"] = result.n;
    j["method"] = result.method;
    j["optimum"] = result.optimum;
    if (include_witness) j["witness"] = family_members_json(result.witness);
    return j;
}

}  // namespace balcube
