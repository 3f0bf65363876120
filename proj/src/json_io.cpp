#include "planar/json_io.hpp"

#include <string>

namespace planar::json_io {

namespace {

// Converts parse and type errors into the library's error type.
template <typename F>
auto parse(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::runtime_error& e) {
    // malformed decimal strings
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const BipartiteMultigraph& g) { return {{"mult", g.matrix()}, {"n", g.n()}, {"r", g.r()}}; }

Json to_json(const Configuration& f) { return {{"n", f.n()}, {"pairing", f.one_based()}, {"r", f.r()}}; }

Json to_json(const YoungTableau& t) { return {{"rows", t.rows()}}; }

Json to_json(const Walk& w) { return {{"d", w.dimension()}, {"steps", w.steps()}}; }

Json to_json(const RepresentativeWalk& w) {
  return {{"a", w.up()}, {"b", w.down()}, {"d", w.dimension()}, {"n", w.n()}, {"r", w.r()}};
}

Json to_json(const TruncatedSeries& s) {
  Json vars = Json::array();
  for (const auto& v : s.variables()) vars.push_back({{"half", v.granularity == Granularity::half}, {"name", v.name}});
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) {
    terms.push_back({{"den", to_string(BigInt(denominator(c)))},
                     {"exp", e},
                     {"num", to_string(BigInt(numerator(c)))}});
  }
  return {{"terms", terms}, {"vars", vars}, {"xmax", s.x_bound()}};
}

BipartiteMultigraph multigraph_from_json(const Json& j) {
  return parse("multigraph", [&] {
    return BipartiteMultigraph(j.at("n").get<int>(), j.at("r").get<int>(),
                               j.at("mult").get<std::vector<std::vector<int>>>());
  });
}

Configuration configuration_from_json(const Json& j) {
  return parse("configuration", [&] {
    const auto pairing = j.at("pairing").get<std::vector<int>>();
    return Configuration::from_one_based(j.at("n").get<int>(), j.at("r").get<int>(), pairing);
  });
}

YoungTableau tableau_from_json(const Json& j) {
  return parse("tableau", [&] { return YoungTableau(j.at("rows").get<std::vector<std::vector<int>>>()); });
}

Walk walk_from_json(const Json& j) {
  return parse("walk", [&] { return Walk(j.at("d").get<int>(), j.at("steps").get<std::vector<int>>()); });
}

RepresentativeWalk representative_from_json(const Json& j) {
  return parse("representative walk", [&] {
    return RepresentativeWalk(j.at("d").get<int>(), j.at("n").get<int>(), j.at("r").get<int>(),
                              j.at("a").get<std::vector<int>>(), j.at("b").get<std::vector<int>>());
  });
}

TruncatedSeries series_from_json(const Json& j) {
  return parse("series", [&] {
    std::vector<SeriesVariable> vars;
    for (const auto& v : j.at("vars")) {
      vars.push_back({v.at("name").get<std::string>(),
                      v.at("half").get<bool>() ? Granularity::half : Granularity::integer});
    }
    TruncatedSeries s(vars, j.at("xmax").get<int>());
    for (const auto& t : j.at("terms")) {
      const BigInt num(t.at("num").get<std::string>());
      const BigInt den(t.at("den").get<std::string>());
      if (den == 0) throw InvalidInput("series: zero denominator");
      s.add_term(t.at("exp").get<std::vector<int>>(), Rational(num, den));
    }
    return s;
  });
}

}  // namespace planar::json_io
