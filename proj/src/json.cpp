#include "oi/json.hpp"

#include "oi/error.hpp"

namespace oi {

  namespace {
    json coords(std::span<CarrierPoint const> points) {
      json out = json::array();
      for (auto p : points) {
        out.push_back(p.coord);
      }
      return out;
    }

    PointSeq points_from(json const& j, char const* key) {
      if (!j.contains(key) || !j.at(key).is_array()) {
        throw UsageError(std::string("element JSON needs an array '") + key
                         + "'");
      }
      PointSeq out;
      for (auto const& v : j.at(key)) {
        if (!v.is_number_integer()) {
          throw UsageError(std::string("non-integer coordinate in '") + key
                           + "'");
        }
        out.emplace_back(v.get<std::int64_t>());
      }
      return out;
    }
  }  // namespace

  json to_json(PartialOrderIso const& a) {
    return json{{"dom", coords(a.dom())}, {"ran", coords(a.ran())}};
  }

  PartialOrderIso element_from_json(json const& j) {
    if (!j.is_object()) {
      throw UsageError("element JSON must be an object");
    }
    return make_iso(points_from(j, "dom"), points_from(j, "ran"));
  }

  json to_json(QuotientElement const& x) {
    return x.is_zero() ? json(nullptr) : to_json(x.lifted());
  }

  json to_json(DClassGrid const& d) {
    json rows = json::array(), cols = json::array();
    for (auto const& r : d.rows) {
      rows.push_back(coords(r));
    }
    for (auto const& c : d.cols) {
      cols.push_back(coords(c));
    }
    return json{{"rank", d.rank}, {"rows", rows}, {"cols", cols}};
  }

  json to_json(EggBox const& box) {
    json out = json::array();
    for (auto const& d : box.classes) {
      out.push_back(to_json(d));
    }
    return out;
  }

  json congruence_json(EnumeratedSemigroup const& s, Congruence const& c) {
    json blocks = json::array();
    for (auto const& block : c.blocks()) {
      json b = json::array();
      for (auto i : block) {
        b.push_back(to_json(s.at(i)));
      }
      blocks.push_back(std::move(b));
    }
    auto k = is_rees(s, c);
    return json{{"blocks", std::move(blocks)},
                {"is_rees", k ? json(*k) : json(nullptr)}};
  }

  json to_json(LayerReport const& layer) {
    return json{{"layer", layer.layer},
                {"samples", layer.samples},
                {"witness_found", layer.witness_found},
                {"seed", layer.seed}};
  }

  json to_json(TightSeriesReport const& report) {
    json layers = json::array();
    for (auto const& l : report.layers) {
      layers.push_back(to_json(l));
    }
    return json{{"target", report.target},
                {"seed", report.seed},
                {"bottom_finite", report.bottom_finite},
                {"pass", report.passed()},
                {"layers", std::move(layers)}};
  }

  json to_json(CollapseChain const& chain) {
    json steps = json::array();
    for (auto const& step : chain.steps) {
      steps.push_back(json{{"iota", step.iota.to_string()},
                           {"beta", step.next.to_string()}});
    }
    json failures = json::array();
    for (auto const& f : collapse_chain_failures(chain)) {
      failures.push_back(f);
    }
    return json{{"alpha", chain.alpha.to_string()},
                {"beta", chain.beta.to_string()},
                {"start", chain.start.to_string()},
                {"steps", std::move(steps)},
                {"failures", std::move(failures)}};
  }

}  // namespace oi
