#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subword/algebra_r.hpp"
#include "subword/groupoid.hpp"
#include "subword/integer.hpp"
#include "subword/pairing.hpp"
#include "subword/parse.hpp"
#include "subword/word.hpp"

namespace subword {

// Coefficients travel as decimal strings: they are arbitrary-precision
// integers and would silently lose digits as JSON numbers.

inline void to_json(nlohmann::json& j, const RElement& u) {
    std::vector<std::string> p, q;
    p.reserve(u.p.size());
    q.reserve(u.q.size());
    for (const Int& c : u.p) p.push_back(c.get_str());
    for (const Int& c : u.q) q.push_back(c.get_str());
    j = {{"N", u.trunc_order}, {"p", p}, {"q", q}};
}

namespace detail {
inline Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long>());
}
} // namespace detail

inline void from_json(const nlohmann::json& j, RElement& u) {
    u = RElement(j.at("N").get<int>());
    const auto& p = j.at("p");
    const auto& q = j.at("q");
    for (std::size_t i = 0; i < u.p.size() && i < p.size(); ++i)
        u.p[i] = detail::int_from_json(p[i]);
    for (std::size_t i = 0; i < u.q.size() && i < q.size(); ++i)
        u.q[i] = detail::int_from_json(q[i]);
}

inline void to_json(nlohmann::json& j, const PairingReport& r) {
    j = {{"n", r.n},
         {"t_n_r_n", r.t_n_r_n},
         {"t_nm1_r_nm1", r.t_nm1_r_nm1},
         {"total", r.total},
         {"f_word_length", r.f_word_length},
         {"g_word_length", r.g_word_length}};
}

inline void from_json(const nlohmann::json& j, PairingReport& r) {
    j.at("n").get_to(r.n);
    j.at("t_n_r_n").get_to(r.t_n_r_n);
    j.at("t_nm1_r_nm1").get_to(r.t_nm1_r_nm1);
    j.at("total").get_to(r.total);
    j.at("f_word_length").get_to(r.f_word_length);
    j.at("g_word_length").get_to(r.g_word_length);
}

inline std::string morph_kind_name(MorphKind k) {
    switch (k) {
        case MorphKind::Loop: return "loop";
        case MorphKind::ToP1: return "d_alpha-target";
        case MorphKind::FromP2: return "d_alphabeta-source";
    }
    return "loop";
}

inline void to_json(nlohmann::json& j, const GroupoidMorphism& m) {
    j = {{"kind", morph_kind_name(m.kind)}, {"word", to_string(m.w)}};
}

inline void from_json(const nlohmann::json& j, GroupoidMorphism& m) {
    m = parse_morphism(j.at("kind").get<std::string>() + ":" +
                       j.at("word").get<std::string>());
}

} // namespace subword
