#pragma once
// JSON views of the library types.  Objects keep insertion order and field
// names mirror the struct fields; divisor classes serialize as coordinate
// arrays in the (H, L_1, ..., L_r) / (H_1, H_2) basis, missing optional data
// serializes as null.
#include "json.hpp"
#include "sodlab/catalog.hpp"
#include "sodlab/descent.hpp"
#include "sodlab/links.hpp"
#include "sodlab/surfdb.hpp"

namespace sodlab {

using Json = nlohmann::ordered_json;

Json json_of(const SurfaceModel& s);
Json json_of(const KClass& e);
Json json_of(const DescentMeta& m);
Json json_of(const ClassRecord& c);
Json json_of(const MarkedCollection& c);
Json json_of(const SodReport& r);
Json json_of(const CatClass& c);
Json json_of(const CatBlock& b);
Json json_of(const CatalogEntry& e);
Json json_of(const ReplayStep& s);
Json json_of(const Dp5Report& r);
Json json_of(const HomaloidalSystem& h);
Json json_of(const LinkMatrix& m);
Json json_of(const LinkIdentity& i);
Json json_of(const LinkExpansion& x);
Json json_of(const FClassAssignment& a);
Json json_of(const BundleSpec& b);
Json json_of(const SurfaceCase& c);
Json json_of(const TwistWitness& w);
Json json_of(const DescentReport& r);

template <typename T>
Json json_list(const std::vector<T>& items) {
  Json a = Json::array();
  for (const T& item : items) a.push_back(json_of(item));
  return a;
}

}  // namespace sodlab
