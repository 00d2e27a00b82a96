// JSON forms of elements and reports. Keys are emitted in the documented
// order, so equal inputs give byte-identical output.

#ifndef OI_JSON_HPP_
#define OI_JSON_HPP_

#include <nlohmann/json.hpp>

#include "oi/congruence.hpp"
#include "oi/pariso.hpp"
#include "oi/semigroup.hpp"
#include "oi/series.hpp"

namespace oi {

  using json = nlohmann::ordered_json;

  //! {"dom":[...],"ran":[...]}
  json to_json(PartialOrderIso const& a);
  //! Inverse of to_json; throws UsageError on a malformed object and
  //! RankError/OrderError on an ill-formed map.
  PartialOrderIso element_from_json(json const& j);

  //! null for the zero, otherwise the lifted element.
  json to_json(QuotientElement const& x);

  //! {"rank":k,"rows":[...],"cols":[...]} for one D-class.
  json to_json(DClassGrid const& d);
  json to_json(EggBox const& box);

  //! {"blocks":[[elem,...],...],"is_rees":k|null}
  json congruence_json(EnumeratedSemigroup const& s, Congruence const& c);

  //! {"layer":k,"samples":N,"witness_found":N,"seed":s}
  json to_json(LayerReport const& layer);
  json to_json(TightSeriesReport const& report);

  //! Steps as {"iota":"[..]","beta":"[..]"} in element text syntax.
  json to_json(CollapseChain const& chain);

}  // namespace oi

#endif  // OI_JSON_HPP_
