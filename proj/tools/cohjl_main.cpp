// Command-line front end. Thin: every computation goes through the C API
// in cohjl.h; this file only parses flags, assembles request JSON and
// formats replies.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "cohjl.h"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;
constexpr int exit_internal = 3;

struct CtxDeleter {
  void operator()(cohjl_ctx* c) const { cohjl_ctx_free(c); }
};

struct Result {
  cohjl_status status;
  std::string text;
  std::string error;
};

template <typename Fn>
Result call(cohjl_ctx* ctx, Fn&& fn) {
  char* out = nullptr;
  const cohjl_status st = fn(&out);
  Result r;
  r.status = st;
  if (out) {
    r.text = out;
    cohjl_string_free(out);
  }
  r.error = cohjl_last_error(ctx);
  return r;
}

int finish(const Result& r, bool raw_text = false) {
  if (r.status == COHJL_OK) {
    if (!r.text.empty()) std::cout << r.text << (raw_text ? "" : "\n");
    return exit_ok;
  }
  std::cerr << "error: " << r.error << "\n";
  if (r.status == COHJL_ERR_CHECK_FAILED) {
    if (!r.text.empty()) std::cout << r.text << "\n";
    return exit_check_failed;
  }
  return r.status == COHJL_ERR_INTERNAL ? exit_internal : exit_input_error;
}

// "0,1,1" -> [0,1,1]; reports the offending flag on garbage
json csv_to_array(const std::string& csv, const std::string& flag) {
  json arr = json::array();
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const long long v = std::stoll(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      arr.push_back(v);
    } catch (const std::exception&) {
      std::cerr << "error: " << flag << ": cannot parse integer '" << item << "'\n";
      std::exit(exit_input_error);
    }
  }
  if (arr.empty()) {
    std::cerr << "error: " << flag << ": empty list\n";
    std::exit(exit_input_error);
  }
  return arr;
}

// --mu accepts the n entries or the shorthand "0" for the zero weight
std::string mu_json_for(const std::string& mu_csv, int n, const std::string& flag) {
  json arr = csv_to_array(mu_csv, flag);
  if (arr.size() == 1 && arr[0].get<long long>() == 0 && n != 1) {
    arr = json::array();
    for (int i = 0; i < n; ++i) arr.push_back(0);
  }
  return arr.dump();
}

std::string row_json_from_flags(const std::string& kind, const std::string& partition_csv,
                                const std::string& lambda_csv, long long w, int eps) {
  json row;
  row["kind"] = kind;
  row["partition"] = csv_to_array(partition_csv, "--partition");
  if (!lambda_csv.empty()) row["lambda"] = csv_to_array(lambda_csv, "--lambda");
  row["w"] = w;
  row["eps"] = eps;
  return row.dump();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open file '" << path << "'\n";
    std::exit(exit_input_error);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json_lines(const std::string& array_text) {
  const json arr = json::parse(array_text);
  for (const auto& row : arr) std::cout << row.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::unique_ptr<cohjl_ctx, CtxDeleter> ctx(cohjl_ctx_new());

  CLI::App app{"Cohomological duals of GL_n(R) / GL_k(H), the archimedean "
               "Jacquet-Langlands transfer, Langlands parameters and exact "
               "cyclotomic Hecke bookkeeping"};
  app.require_subcommand(1);

  // catalog
  auto* cat = app.add_subcommand("catalog", "enumerate Coh_mu as JSON rows");
  std::string cat_kind = "H", cat_mu = "0";
  int cat_k = 1;
  cat->add_option("--kind", cat_kind, "H (quaternionic) or R (split)")
      ->check(CLI::IsMember({"H", "R"}));
  cat->add_option("--k", cat_k, "rank k (the split group is GL_{2k}(R))")->required();
  cat->add_option("--mu", cat_mu, "highest weight, 2k comma-separated integers or 0");

  // tables
  auto* tab = app.add_subcommand("tables", "render the Coh_mu tables for GL_{2k}(R) and GL_k(H)");
  int tab_k = 2;
  std::string tab_mu = "0";
  tab->add_option("--k", tab_k, "rank k")->required();
  tab->add_option("--mu", tab_mu, "highest weight, 2k integers or 0");

  // poincare
  auto* poi = app.add_subcommand("poincare", "Poincare polynomial of one catalog row");
  std::string poi_kind = "H", poi_partition, poi_lambda;
  long long poi_w = 0;
  int poi_eps = 0;
  bool poi_json = false;
  poi->add_option("--kind", poi_kind)->check(CLI::IsMember({"H", "R"}));
  poi->add_option("--partition", poi_partition)->required();
  poi->add_option("--lambda", poi_lambda, "defaults to 0");
  poi->add_option("--w", poi_w);
  poi->add_option("--eps", poi_eps);
  poi->add_flag("--json", poi_json, "emit the coefficient map instead of the pretty form");

  // jl-transfer
  auto* jlt = app.add_subcommand("jl-transfer", "transfer a split row to the quaternionic side");
  std::string jlt_partition, jlt_lambda, jlt_row;
  long long jlt_w = 0;
  int jlt_eps = 0;
  jlt->add_option("--partition", jlt_partition, "split partition, all parts even");
  jlt->add_option("--lambda", jlt_lambda);
  jlt->add_option("--w", jlt_w);
  jlt->add_option("--eps", jlt_eps);
  jlt->add_option("--row", jlt_row, "full row JSON (overrides the flags)");

  // jl-fiber
  auto* jlf = app.add_subcommand("jl-fiber", "fiber of the transfer over a quaternionic row");
  std::string jlf_partition, jlf_lambda, jlf_mu;
  long long jlf_w = 0;
  jlf->add_option("--partition", jlf_partition)->required();
  jlf->add_option("--mu", jlf_mu, "highest weight, 2k integers or 0")->required();
  jlf->add_option("--lambda", jlf_lambda, "defaults to the lambda of mu");
  jlf->add_option("--w", jlf_w, "defaults to the w of mu");

  // param
  auto* par = app.add_subcommand("param", "Langlands parameter and predicates");
  std::string par_partition, par_lambda, par_pairs;
  long long par_w = 0;
  int par_eps = 0;
  par->add_option("--partition", par_partition, "split partition of a catalog row");
  par->add_option("--lambda", par_lambda);
  par->add_option("--w", par_w);
  par->add_option("--eps", par_eps);
  par->add_option("--pairs", par_pairs,
                  "raw parameter JSON [[p_num,p_den,q_num,q_den],...] instead of a row");

  // check
  auto* chk = app.add_subcommand("check", "run a predicate pipeline over a descriptor file");
  std::string chk_what, chk_file;
  chk->add_option("what", chk_what, "currently: regular-algebraic")->required();
  chk->add_option("file", chk_file, "descriptor JSON file, - for stdin")->required();

  // rationality
  auto* rat = app.add_subcommand("rationality", "global rationality field of a descriptor");
  std::string rat_file;
  rat->add_option("file", rat_file, "descriptor JSON file, - for stdin")->required();

  // global
  auto* glo = app.add_subcommand("global", "global operations on a descriptor");
  std::string glo_op, glo_file;
  glo->add_option("--op", glo_op, "jl | purity | kunneth | field-equality")
      ->required()
      ->check(CLI::IsMember({"jl", "purity", "kunneth", "field-equality"}));
  glo->add_option("file", glo_file, "descriptor JSON file, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  if (cat->parsed()) {
    const std::string mu = mu_json_for(cat_mu, 2 * cat_k, "--mu");
    const Result r = call(ctx.get(), [&](char** out) {
      return cohjl_catalog(ctx.get(), cat_kind.c_str(), cat_k, mu.c_str(), out);
    });
    if (r.status != COHJL_OK) return finish(r);
    print_json_lines(r.text);
    return exit_ok;
  }

  if (tab->parsed()) {
    const std::string mu = mu_json_for(tab_mu, 2 * tab_k, "--mu");
    return finish(call(ctx.get(),
                       [&](char** out) {
                         return cohjl_tables(ctx.get(), tab_k, mu.c_str(), out);
                       }),
                  /*raw_text=*/true);
  }

  if (poi->parsed()) {
    const std::string row = row_json_from_flags(poi_kind, poi_partition, poi_lambda, poi_w, poi_eps);
    const Result r = call(ctx.get(), [&](char** out) {
      return cohjl_poincare(ctx.get(), row.c_str(), out);
    });
    if (r.status != COHJL_OK) return finish(r);
    const json j = json::parse(r.text);
    std::cout << (poi_json ? j["poincare"].dump() : j["pretty"].get<std::string>()) << "\n";
    return exit_ok;
  }

  if (jlt->parsed()) {
    const std::string row = !jlt_row.empty()
                                ? jlt_row
                                : row_json_from_flags("R", jlt_partition, jlt_lambda, jlt_w, jlt_eps);
    return finish(call(ctx.get(), [&](char** out) {
      return cohjl_transfer(ctx.get(), row.c_str(), out);
    }));
  }

  if (jlf->parsed()) {
    json row;
    row["kind"] = "H";
    row["partition"] = csv_to_array(jlf_partition, "--partition");
    const int k = 0;  // rank comes from the partition; mu must have 2*sum entries
    (void)k;
    long long total = 0;
    for (const auto& part : row["partition"]) total += part.get<long long>();
    const std::string mu = mu_json_for(jlf_mu, static_cast<int>(2 * total), "--mu");
    if (!jlf_lambda.empty()) {
      row["lambda"] = csv_to_array(jlf_lambda, "--lambda");
      row["w"] = jlf_w;
    } else {
      // derive (w, lambda) from mu
      const json muj = json::parse(mu);
      const size_t n = muj.size();
      json lam = json::array();
      for (size_t j = 0; j < n / 2; ++j)
        lam.push_back(muj[j].get<long long>() - muj[n - 1 - j].get<long long>());
      row["lambda"] = lam;
      row["w"] = muj[0].get<long long>() + muj[n - 1].get<long long>();
    }
    const std::string row_text = row.dump();
    const Result r = call(ctx.get(), [&](char** out) {
      return cohjl_fiber(ctx.get(), row_text.c_str(), mu.c_str(), out);
    });
    if (r.status != COHJL_OK) return finish(r);
    print_json_lines(r.text);
    return exit_ok;
  }

  if (par->parsed()) {
    if (!par_pairs.empty()) {
      return finish(call(ctx.get(), [&](char** out) {
        return cohjl_param_predicates(ctx.get(), par_pairs.c_str(), out);
      }));
    }
    if (par_partition.empty()) {
      std::cerr << "error: param needs --partition or --pairs\n";
      return exit_input_error;
    }
    const std::string row = row_json_from_flags("R", par_partition, par_lambda, par_w, par_eps);
    return finish(call(ctx.get(), [&](char** out) {
      return cohjl_parameter(ctx.get(), row.c_str(), out);
    }));
  }

  if (chk->parsed()) {
    if (chk_what != "regular-algebraic") {
      std::cerr << "error: check: unknown predicate '" << chk_what << "'\n";
      return exit_input_error;
    }
    const std::string desc = read_input(chk_file);
    return finish(call(ctx.get(), [&](char** out) {
      return cohjl_descriptor_run(ctx.get(), "check-regular-algebraic", desc.c_str(), out);
    }));
  }

  if (rat->parsed()) {
    const std::string desc = read_input(rat_file);
    return finish(call(ctx.get(), [&](char** out) {
      return cohjl_descriptor_run(ctx.get(), "rationality", desc.c_str(), out);
    }));
  }

  if (glo->parsed()) {
    const std::string desc = read_input(glo_file);
    return finish(call(ctx.get(), [&](char** out) {
      return cohjl_descriptor_run(ctx.get(), glo_op.c_str(), desc.c_str(), out);
    }));
  }

  return exit_input_error;
}
