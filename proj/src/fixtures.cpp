#include "a3b/builders.hpp"

#include <sstream>

namespace a3b {

namespace {

struct FixtureData {
  const char* name;
  const char* quad;
  const char* chirality;
  const char* gluings;  // "tile.slot-tile.slot" pairs
};

// Tilings outside the earth map construction, stored as gluing tables.
const FixtureData kFixtures[] = {
    {"f16_a", "(1,4,2,2)/4@16", "+-++--+--+-+-+-+",
     "0.0-4.2 0.1-3.2 0.2-2.1 0.3-1.3 1.0-8.0 1.1-10.1 1.2-2.0 2.2-6.1 2.3-5.3 3.0-7.2 3.1-6.2 3.3-4.3 4.0-14.0 4.1-8.1 5.0-10.0 5.1-12.1 5.2-6.0 6.3-7.3 7.0-12.0 7.1-14.1 8.2-15.0 8.3-9.3 9.0-10.2 9.1-11.2 9.2-15.1 10.3-11.3 11.0-12.2 11.1-13.2 12.3-13.3 13.0-14.2 13.1-15.2 14.3-15.3"},
    {"f16_b", "(1,4,2,2)/4@16", "+-++--+-+-+-++--",
     "0.0-4.2 0.1-3.2 0.2-2.1 0.3-1.3 1.0-8.1 1.1-10.0 1.2-2.0 2.2-6.1 2.3-5.3 3.0-7.2 3.1-6.2 3.3-4.3 4.0-13.1 4.1-8.0 5.0-10.1 5.1-12.0 5.2-6.0 6.3-7.3 7.0-12.1 7.1-13.0 8.2-9.0 8.3-14.3 9.1-14.2 9.2-11.1 9.3-10.3 10.2-11.0 11.2-15.1 11.3-12.3 12.2-15.0 13.2-14.0 13.3-15.3 14.1-15.2"},
    {"f36_a", "(5,4,7,3)/9@36", "+++-++-+-++-++--+-++++-+++--+--+++++",
     "0.0-5.0 0.1-4.2 0.2-2.0 0.3-1.3 1.0-3.0 1.1-6.0 1.2-8.2 2.1-4.1 2.2-27.2 2.3-3.3 3.1-12.0 3.2-13.2 4.0-27.1 4.3-14.3 5.1-9.2 5.2-10.0 5.3-7.3 6.1-8.1 6.2-16.2 6.3-12.3 7.0-11.0 7.1-15.0 7.2-14.2 8.0-16.1 8.3-9.3 9.0-17.1 9.1-10.1 10.2-17.2 10.3-11.3 11.1-18.0 11.2-19.2 12.1-13.1 12.2-23.1 13.0-23.2 13.3-26.3 14.0-28.1 14.1-15.1 15.2-28.2 15.3-18.3 16.0-17.0 16.3-21.3 17.3-20.3 18.1-19.1 18.2-34.1 19.0-34.2 19.3-22.3 20.0-21.2 20.1-24.1 20.2-22.2 21.0-23.0 21.1-24.2 22.0-35.0 22.1-24.0 23.3-25.3 24.3-29.3 25.0-26.0 25.1-30.0 25.2-29.2 26.1-31.0 26.2-32.2 27.0-28.0 27.3-32.3 28.3-33.3 29.0-35.1 29.1-30.1 30.2-35.2 30.3-31.3 31.1-32.1 31.2-33.1 32.0-33.2 33.0-34.0 34.3-35.3"},
    {"f36_b", "(15,6,10,7)/18@36", "++--+++-+-+-+--+-+++-+-+-+-+---+---+",
     "0.0-5.2 0.1-12.2 0.2-2.2 0.3-1.3 1.0-4.2 1.1-8.2 1.2-3.2 2.0-6.1 2.1-16.1 2.3-4.3 3.0-10.1 3.1-14.1 3.3-5.3 4.0-6.0 4.1-7.0 5.0-10.0 5.1-11.0 6.2-29.2 6.3-7.3 7.1-9.2 7.2-28.0 8.0-15.0 8.1-14.0 8.3-9.3 9.0-15.1 9.1-20.2 10.2-18.1 10.3-11.3 11.1-13.2 11.2-24.1 12.0-17.0 12.1-16.0 12.3-13.3 13.0-17.1 13.1-32.1 14.2-18.2 14.3-15.3 15.2-19.0 16.2-29.1 16.3-17.3 17.2-31.1 18.0-23.2 18.3-19.3 19.1-21.2 19.2-22.2 20.0-27.1 20.1-28.1 20.3-21.3 21.0-27.0 21.1-26.0 22.0-25.1 22.1-26.1 22.3-23.3 23.0-25.0 23.1-24.0 24.2-32.0 24.3-25.3 25.2-33.2 26.2-33.1 26.3-27.3 27.2-35.1 28.2-35.2 28.3-29.3 29.0-30.2 30.0-34.0 30.1-31.0 30.3-35.3 31.2-32.2 31.3-34.3 32.3-33.3 33.0-34.2 34.1-35.0"},
};

CombinatorialTiling decode(const FixtureData& d) {
  CombinatorialTiling t;
  for (const char* c = d.chirality; *c; ++c) t.add_tile(*c == '+' ? 1 : -1);
  std::istringstream in(d.gluings);
  std::string tok;
  while (in >> tok) {
    int a, s, b, r;
    char dot1, dash, dot2;
    std::istringstream p(tok);
    if (!(p >> a >> dot1 >> s >> dash >> b >> dot2 >> r)) throw ConstructionError("bad fixture token " + tok);
    t.connect({a, s}, {b, r});
  }
  return t;
}

}  // namespace

std::vector<std::string> exceptional_names() {
  std::vector<std::string> out;
  for (const auto& d : kFixtures) out.emplace_back(d.name);
  return out;
}

ExceptionalTiling build_exceptional(const std::string& which) {
  for (const auto& d : kFixtures) {
    if (which != d.name) continue;
    ExceptionalTiling ex{parse_quad_id(d.quad), decode(d)};
    if (auto errs = validate(ex.tiling, ex.quad); !errs.empty()) {
      throw ConstructionError("fixture " + which + " is invalid: " + errs.front());
    }
    return ex;
  }
  throw ConstructionError("unknown exceptional tiling " + which);
}

}  // namespace a3b
