#pragma once

#include <json.hpp>

#include "kwall/kstab.hpp"
#include "kwall/wallfinder.hpp"

namespace kwall::serialize {

using json = nlohmann::ordered_json;

json rational(const Rational& q);  // "p/q"
Rational rational_from(const json& j);

json linear_form(const LinearForm& f);  // ["c0","ca","cb"]
LinearForm linear_form_from(const json& j);

json curve(const curvealg::CurveSpec& c);
curvealg::CurveSpec curve_from(const json& j);  // throws ParseError / curve errors

json profile(const kstab::KProfile& p);
kstab::KProfile profile_from(const json& j);

json wall(const wallfinder::Wall& w);
wallfinder::Wall wall_from(const json& j);

// parse text; throws Error("ParseError") on malformed JSON
json parse(const std::string& text);
std::string dump(const json& j);

}  // namespace kwall::serialize
