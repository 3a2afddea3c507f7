#include "core/json_io.hpp"

#include "core/error.hpp"

namespace coh {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) fail(errc::invalid_input, what);
}

}  // namespace

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::invalid_input, "malformed JSON");
  return j;
}

Json partition_to_json(const OrderedPartition& p) { return Json(p.parts); }

OrderedPartition partition_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "partition must be a non-empty integer array");
  OrderedPartition p;
  for (const auto& e : j) {
    require(e.is_number_integer(), "partition entries must be integers");
    p.parts.push_back(e.get<int>());
  }
  require(p.valid(), "invalid partition " + p.str());
  return p;
}

Json weight_to_json(const Weight& mu) { return Json(mu); }

Weight weight_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "weight must be a non-empty integer array");
  Weight mu;
  for (const auto& e : j) {
    require(e.is_number_integer(), "weight entries must be integers");
    mu.push_back(e.get<long long>());
  }
  return mu;
}

Json module_to_json(const AqModule& m) {
  Json j;
  j["kind"] = m.kind.is_split() ? "R" : "H";
  j["partition"] = partition_to_json(m.partition);
  j["lambda"] = Json(m.lambda.lambda);
  j["w"] = m.lambda.w;
  j["eps"] = m.epsilon;
  return j;
}

Json catalog_row_json(const AqModule& m) {
  Json j = module_to_json(m);
  j["tempered"] = is_tempered(m);
  try {
    Json pj = Json::object();
    for (auto& [d, c] : poincare(m).coeffs()) pj[std::to_string(d)] = c;
    j["poincare"] = pj;
  } catch (const error& e) {
    if (e.code() != errc::unsupported_split_partition) throw;
    j["poincare"] = nullptr;
  }
  const InductionDatum d = langlands_data(m);
  Json lj = Json::array();
  for (const ComplexBlock& b : d.blocks) lj.push_back(Json{{"l", b.l}, {"u", folded_u(d, b)}});
  for (const ScalarBlock& s : d.scalars) {
    Json e{{"u", folded_scalar_u(d, s)}};
    if (m.kind.is_split()) e["eps"] = s.eps;
    lj.push_back(e);
  }
  j["langlands"] = lj;
  return j;
}

AqModule module_from_json(const Json& j) {
  require(j.is_object(), "module must be a JSON object");
  require(j.contains("kind") && j["kind"].is_string(), "module needs a kind \"H\" or \"R\"");
  const std::string kind = j["kind"].get<std::string>();
  require(kind == "H" || kind == "R", "module kind must be \"H\" or \"R\"");
  require(j.contains("partition"), "module needs a partition");
  AqModule m;
  m.partition = partition_from_json(j["partition"]);
  const int total = m.partition.total();
  m.kind = kind == "R" ? GroupKind::split_real(total)
                       : GroupKind::quaternionic(total);
  const int k = m.kind.rank_k();
  if (j.contains("lambda")) {
    for (const auto& e : j["lambda"]) m.lambda.lambda.push_back(e.get<long long>());
  } else {
    m.lambda.lambda.assign(k, 0);
  }
  require(static_cast<int>(m.lambda.lambda.size()) == k,
          "lambda must have k = " + std::to_string(k) + " entries");
  m.lambda.w = j.value("w", 0LL);
  m.epsilon = j.value("eps", 0);
  require(m.epsilon == 0 || m.epsilon == 1, "eps must be 0 or 1");
  if (kind == "R") {
    require(m.partition.all_parts_even(), "split partitions must have even parts");
    if (m.partition.k0() == 0) m.epsilon = 0;
  } else {
    m.partition = canonical_representative(m.partition);
    m.epsilon = 0;
  }
  require(is_admissible(m.lambda, rank_partition(m.partition, m.kind)),
          "lambda is not admissible for the partition");
  return m;
}

Json parameter_to_json(const WeilParameter& t) {
  Json j = Json::array();
  for (auto& [p, q] : t.pairs) j.push_back(Json{p.num, p.den, q.num, q.den});
  return j;
}

WeilParameter parameter_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "parameter must be a non-empty array of quadruples");
  WeilParameter t;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 4, "parameter entries are [p_num,p_den,q_num,q_den]");
    t.pairs.emplace_back(Rat(e[0].get<long long>(), e[1].get<long long>()),
                         Rat(e[2].get<long long>(), e[3].get<long long>()));
  }
  t.validate();
  return t;
}

Json cyclo_to_json(const CyclotomicNumber& x) {
  Json coords = Json::object();
  for (size_t i = 0; i < x.coords.size(); ++i)
    if (x.coords[i] != 0) coords[std::to_string(i)] = bigrat_str(x.coords[i]);
  return Json{{"N", x.N}, {"coords", coords}};
}

CyclotomicNumber cyclo_from_json(const Json& j) {
  require(j.is_object() && j.contains("N"), "cyclotomic number needs a conductor N");
  const int N = j["N"].get<int>();
  CyclotomicNumber x = CyclotomicNumber::zero(N);
  if (j.contains("coords")) {
    require(j["coords"].is_object(), "coords must map power index to rational string");
    for (auto& [key, val] : j["coords"].items()) {
      size_t idx = std::stoul(key);
      require(idx < x.coords.size(), "coordinate index " + key + " out of range");
      x.coords[idx] = bigrat_parse(val.get<std::string>());
    }
  }
  return x;
}

Json subfield_to_json(const CyclotomicSubfield& f) {
  return Json{{"N", f.N}, {"gens", f.generators()}};
}

CyclotomicSubfield subfield_from_json(const Json& j) {
  require(j.is_object() && j.contains("N"), "subfield needs a conductor N");
  std::vector<long long> gens;
  if (j.contains("gens"))
    for (const auto& e : j["gens"]) gens.push_back(e.get<long long>());
  return CyclotomicSubfield::from_generators(j["N"].get<int>(), gens);
}

Json satake_to_json(const SatakeParams& s) {
  Json j = Json::array();
  for (const auto& a : s.alphas) j.push_back(cyclo_to_json(a));
  return j;
}

SatakeParams satake_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "Satake parameters must be a non-empty array");
  std::vector<CyclotomicNumber> alphas;
  for (const auto& e : j) alphas.push_back(cyclo_from_json(e));
  return SatakeParams::make(std::move(alphas));
}

Json descriptor_to_json(const GlobalRepDescriptor& d) {
  Json places;
  places["d"] = d.places.d;
  places["m"] = d.places.m;
  Json arch_list = Json::array();
  for (const auto& p : d.places.arch) {
    const char* kind = p.kind == ArchPlaceKind::Kind::real_split      ? "real-split"
                       : p.kind == ArchPlaceKind::Kind::real_nonsplit ? "real-nonsplit"
                                                                      : "complex";
    arch_list.push_back(Json{{"label", p.label}, {"kind", kind}});
  }
  places["archimedean"] = arch_list;
  Json fin_list = Json::array();
  for (const auto& p : d.places.finite)
    fin_list.push_back(Json{{"label", p.label}, {"split", p.split}, {"ramified", p.ramified}});
  places["finite"] = fin_list;

  Json arch = Json::object();
  for (const auto& [label, c] : d.arch) {
    Json e = Json::object();
    if (c.module) e["module"] = module_to_json(*c.module);
    if (c.parameter) e["parameter"] = parameter_to_json(*c.parameter);
    arch[label] = e;
  }
  Json fin = Json::object();
  for (const auto& [label, c] : d.finite) {
    Json e = Json::object();
    if (c.satake) e["satake"] = satake_to_json(*c.satake);
    if (c.opaque) e["opaque"] = *c.opaque;
    fin[label] = e;
  }
  return Json{{"places", places},
              {"jl_cuspidal", d.jl_cuspidal},
              {"archimedean", arch},
              {"finite", fin}};
}

GlobalRepDescriptor descriptor_from_json(const Json& j) {
  require(j.is_object() && j.contains("places"), "descriptor needs a places section");
  const Json& pl = j["places"];
  GlobalRepDescriptor d;
  d.places.d = pl.value("d", 1);
  d.places.m = pl.value("m", 1);
  require(pl.contains("archimedean") && pl["archimedean"].is_array(),
          "places.archimedean must be an array");
  for (const auto& e : pl["archimedean"]) {
    const std::string kind = e.value("kind", "");
    ArchPlaceKind p;
    p.label = e.value("label", "");
    require(!p.label.empty(), "archimedean place needs a label");
    if (kind == "real-split")
      p.kind = ArchPlaceKind::Kind::real_split;
    else if (kind == "real-nonsplit")
      p.kind = ArchPlaceKind::Kind::real_nonsplit;
    else if (kind == "complex")
      p.kind = ArchPlaceKind::Kind::complex_place;
    else
      fail(errc::invalid_input, "unknown archimedean kind '" + kind + "' at " + p.label);
    d.places.arch.push_back(p);
  }
  if (pl.contains("finite"))
    for (const auto& e : pl["finite"]) {
      FinitePlaceDesc p;
      p.label = e.value("label", "");
      require(!p.label.empty(), "finite place needs a label");
      p.split = e.value("split", true);
      p.ramified = e.value("ramified", false);
      d.places.finite.push_back(p);
    }
  d.jl_cuspidal = j.value("jl_cuspidal", false);
  if (j.contains("archimedean"))
    for (auto& [label, e] : j["archimedean"].items()) {
      ArchComponent c;
      if (e.contains("module")) c.module = module_from_json(e["module"]);
      if (e.contains("parameter")) c.parameter = parameter_from_json(e["parameter"]);
      d.arch[label] = c;
    }
  if (j.contains("finite"))
    for (auto& [label, e] : j["finite"].items()) {
      FiniteComponent c;
      if (e.contains("satake")) c.satake = satake_from_json(e["satake"]);
      if (e.contains("opaque")) c.opaque = e["opaque"].get<std::string>();
      d.finite[label] = c;
    }
  d.validate();
  return d;
}

std::vector<long long> parse_int_csv(const std::string& s) {
  std::vector<long long> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur.empty()) fail(errc::invalid_input, "empty entry in integer list '" + s + "'");
      try {
        out.push_back(std::stoll(cur));
      } catch (const std::exception&) {
        fail(errc::invalid_input, "cannot parse integer '" + cur + "'");
      }
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (out.empty()) fail(errc::invalid_input, "empty integer list");
  return out;
}

}  // namespace coh
