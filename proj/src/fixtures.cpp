#include <mutex>

#include "togliatti/io.hpp"
#include "togliatti/survey.hpp"

namespace togliatti {

namespace {

// Ideals are written as printed; comparisons always go through canonical_form.
constexpr const char* kFixtures = R"json({
  "hyperquadric": {
    "ideal": "x0^3,x0^2*x1,x0*x1^2,x1^3,x2^3,x2^2*x3,x2*x3^2,x3^3",
    "certificate": "2*x0^2+2*x1^2+2*x2^2+2*x3^2+4*x0*x1+4*x2*x3-5*x0*x2-5*x0*x3-5*x1*x2-5*x1*x3"
  },
  "plane-quartic": {
    "ideal": "x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2",
    "factors": ["x0+x1-3*x2", "3*x0^2-10*x0*x1+3*x1^2-4*x0*x2-4*x1*x2+x2^2"]
  },
  "plane-quintic": {
    "ideal": "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2",
    "printed": "24*x0^4+24*x1^4+24*x2^4-154*x0^3*x1-154*x0*x1^3+154*x0^3*x2-154*x1^3*x2-154*x0*x2^3-154*x1*x2^3+269*x0^2*x1^2+269*x0^2*x3^2+269*x1^2*x2^2+288*x0^2*x1*x2+288*x0*x1*x2^2-337*x0*x1^2*x2",
    "printed_vars": 4,
    "suspected_typo": {"printed": "x0^2*x3^2", "meant": "x0^2*x2^2"}
  },
  "minimum-exceptions": {
    "ideals": ["x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2", "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2"],
    "smooth": [false, true]
  },
  "smooth-next-to-minimum": {
    "ideals": [
      "x0^5,x1^5,x2^5,x0^3*x1*x2,x0^2*x1^2*x2,x0*x1^3*x2",
      "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^3*x2,x0*x1*x2^3",
      "x0^5,x1^5,x2^5,x0^2*x1^2*x2,x0^2*x1*x2^2,x0*x1^2*x2^2",
      "x0^7,x1^7,x2^7,x0^3*x1^3*x2,x0^3*x1*x2^3,x0*x1^3*x2^3",
      "x0^7,x1^7,x2^7,x0^5*x1*x2,x0*x1^5*x2,x0*x1*x2^5",
      "x0^7,x1^7,x2^7,x0*x1*x2^5,x0^3*x1^3*x2,x0^2*x1^2*x2^3"
    ]
  },
  "gap-n3d4": {
    "ideals": [
      "x0^4,x1^4,x2^4,x3^4,x0^3*x2,x0^3*x3,x0^2*x1^2,x0^2*x1*x2,x0^2*x1*x3",
      "x0^4,x1^4,x2^4,x3^4,x0^2*x1^2,x0^2*x1*x2,x0^2*x2^2,x0^3*x3,x0^2*x3^2"
    ]
  },
  "cubic-ladder-n4": {
    "mu9": ["x0^3,x1^3,x2^3,x3^3,x4^3,x0^2*x1,x0^2*x2,x0^2*x3,x0^2*x4"],
    "mu10": ["x0^3,x1^3,x2^3,x3^3,x4^3,x0^2*x1,x0*x1^2,x0*x1*x2,x0*x1*x3,x0*x1*x4"]
  },
  "stability": {
    "stable": [
      "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2",
      "x0^7,x1^7,x2^7,x0^3*x1^3*x2,x0^3*x1*x2^3,x0*x1^3*x2^3",
      "x0^7,x1^7,x2^7,x0^5*x1*x2,x0*x1^5*x2,x0*x1*x2^5",
      "x0^7,x1^7,x2^7,x0*x1*x2^5,x0^3*x1^3*x2,x0^2*x1^2*x2^3"
    ],
    "properly_semistable": [
      "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^3*x2,x0*x1*x2^3",
      "x0^5,x1^5,x2^5,x0^3*x1*x2,x0^2*x1^2*x2,x0*x1^3*x2",
      "x0^5,x1^5,x2^5,x0^2*x1^2*x2,x0^2*x1*x2^2,x0*x1^2*x2^2"
    ],
    "equality_subset": {"ideal": "x0^5,x1^5,x2^5,x0^3*x1*x2,x0^2*x1^2*x2,x0*x1^3*x2", "subset": ["x0^3*x1*x2", "x0^2*x1^2*x2"]},
    "example_stable": "x0^5,x1^5,x2^5,x0^2*x1^2*x2",
    "example_unstable": {"ideal": "x0^5,x1^5,x2^5,x0^4*x1", "subset": ["x0^5", "x0^4*x1"], "slope": "-20/3", "subsheaf_slope": "-6"}
  }
})json";

}  // namespace

const nlohmann::json& fixtures() {
  static const nlohmann::json parsed = nlohmann::json::parse(kFixtures);
  return parsed;
}

std::vector<MonomialIdeal> fixture_ideals(std::string_view key) {
  const nlohmann::json* node = &fixtures();
  std::size_t start = 0;
  while (start <= key.size()) {
    auto end = key.find('/', start);
    if (end == std::string_view::npos) end = key.size();
    node = &node->at(std::string(key.substr(start, end - start)));
    start = end + 1;
  }
  if (node->is_object()) node = &node->at("ideals");
  std::vector<MonomialIdeal> out;
  for (const auto& s : *node) out.push_back(canonical_form(parse_inline_ideal(s.get<std::string>())));
  return out;
}

}  // namespace togliatti
