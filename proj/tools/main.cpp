// hyperc: exact computations on hyperplanes W_f = ker f of the space c of
// convergent sequences. JSON in, JSON out; exit 0 on success, 1 on a domain
// error (machine-readable error JSON on stdout), 2 on malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hypc/corpus.hpp"
#include "hypc/duality.hpp"
#include "hypc/hyperplane.hpp"
#include "hypc/isometry.hpp"
#include "hypc/json_io.hpp"
#include "hypc/oracles.hpp"
#include "hypc/ordinal_quotient.hpp"

namespace {

using hypc::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hypc::ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw hypc::ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

// Standing hypothesis: ||f|| = 1. Rejected unless --normalize is given.
hypc::L1Functional load_functional(const std::string& path, bool do_normalize) {
  hypc::L1Vector v = hypc::l1vector_from_json(load_json(path));
  if (do_normalize) return hypc::normalize(v);
  return hypc::L1Functional(v);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural computations on hyperplanes of the space of convergent sequences"};
  app.require_subcommand(1);

  std::string f_path, z_path, x_path, g_path, ehat_path;
  bool do_normalize = false;
  bool inverse = false;
  std::size_t opt_n = 0;
  std::size_t mu_i = 1;
  std::size_t quot_m = 8;
  std::size_t trunc = 32;
  std::size_t depth = 0;
  double tol = 1e-6;
  unsigned max_den = 4, max_support = 3;

  auto add_f = [&](CLI::App* sub) {
    sub->add_option("--f", f_path, "functional JSON file")->required();
    sub->add_flag("--normalize", do_normalize, "normalize f instead of rejecting ||f|| != 1");
  };

  auto* c_classify = app.add_subcommand("classify", "four-way classification of W_f");
  add_f(c_classify);

  auto* c_pconst = app.add_subcommand("pconst", "exact projection constant of W_f");
  add_f(c_pconst);

  auto* c_minproj = app.add_subcommand("minproj", "norm-1 or truncated minimizing projection");
  add_f(c_minproj);
  c_minproj->add_option("--N", opt_n, "truncation length (default: support length)");

  auto* c_apply = app.add_subcommand("apply", "apply P_z(x) = x - f(x) z");
  add_f(c_apply);
  c_apply->add_option("--z", z_path, "z JSON file (sequence with f(z) = 1)")->required();
  c_apply->add_option("--x", x_path, "x JSON file")->required();

  auto* c_isometry = app.add_subcommand("isometry", "isometry c -> W_f (or its inverse)");
  add_f(c_isometry);
  c_isometry->add_option("--x", x_path, "input sequence JSON file")->required();
  c_isometry->add_flag("--inverse", inverse, "apply T^{-1}: delete coordinate j0-1");

  auto* c_dual = app.add_subcommand("dual-limit", "weak* limit of the standard basis");
  add_f(c_dual);

  auto* c_predual = app.add_subcommand("predual", "reconstruct f from a basis limit");
  c_predual->add_option("--ehat", ehat_path, "ehat JSON file")->required();

  auto* c_mu = app.add_subcommand("mu", "measure mu_i of the C(w*n) quotient");
  add_f(c_mu);
  c_mu->add_option("--i", mu_i, "index i >= 1")->required();

  auto* c_quot = app.add_subcommand("quotient", "image sequence (mu_i(g)) and its limit");
  add_f(c_quot);
  c_quot->add_option("--g", g_path, "C(w*n) function JSON file")->required();
  c_quot->add_option("--m", quot_m, "number of terms to emit");

  auto* c_verify = app.add_subcommand("verify", "cross-verification report for one f");
  add_f(c_verify);
  c_verify->add_option("--trunc", trunc, "numeric oracle truncation (default 32)");
  c_verify->add_option("--tol", tol, "numeric oracle tolerance (default 1e-6)");
  c_verify->add_option("--depth", depth, "extreme-point enumeration depth (default: auto)");

  auto* c_corpus = app.add_subcommand("corpus", "exhaustive normalized functional grid");
  c_corpus->add_option("--max-den", max_den, "maximum denominator")->required();
  c_corpus->add_option("--max-support", max_support, "maximum support length")->required();

  try {
    app.parse(argc, argv);

    if (*c_classify) {
      auto f = load_functional(f_path, do_normalize);
      emit(json{{"class", hypc::class_name(hypc::classify(f))}});
    } else if (*c_pconst) {
      auto f = load_functional(f_path, do_normalize);
      emit(json{{"projection_constant", hypc::to_json(hypc::projection_constant(f))},
                {"class", hypc::class_name(hypc::classify(f))}});
    } else if (*c_minproj) {
      auto f = load_functional(f_path, do_normalize);
      if (!hypc::one_complemented(f).empty()) {
        auto mp = hypc::min_projection(f);
        json out = hypc::to_json(mp.proj);
        out["unique"] = mp.unique;
        out["j0"] = mp.j0;
        emit(out);
      } else {
        std::size_t N = opt_n > 0 ? opt_n : std::max<std::size_t>(f.support(), 1);
        auto spec = hypc::minimizing_projection(f, N);
        json out = hypc::to_json(spec);
        out["N"] = N;
        out["lambda_N"] = hypc::to_json(hypc::truncation_lambda(f, N));
        emit(out);
      }
    } else if (*c_apply) {
      auto f = load_functional(f_path, do_normalize);
      auto z = hypc::seq_from_json(load_json(z_path));
      auto x = hypc::seq_from_json(load_json(x_path));
      auto r = hypc::projection_apply(f, z, x);
      emit(json{{"result", hypc::to_json(r)}, {"member", hypc::member(f, r)}});
    } else if (*c_isometry) {
      auto f = load_functional(f_path, do_normalize);
      auto x = hypc::seq_from_json(load_json(x_path));
      auto r = inverse ? hypc::project_wf_to_c(f, x) : hypc::embed_c_into_wf(f, x);
      emit(json{{"result", hypc::to_json(r)}});
    } else if (*c_dual) {
      auto f = load_functional(f_path, do_normalize);
      auto ws = hypc::weak_star_limit(f);
      emit(json{{"ehat", hypc::to_json(ws.ehat)},
                {"outside_hypothesis", ws.outside_hypothesis}});
    } else if (*c_predual) {
      auto ehat = hypc::l1vector_from_json(load_json(ehat_path));
      auto pr = hypc::predual_from_limit(ehat);
      if (pr.iso_c)
        emit(json{{"class", "iso_c"}, {"representative", hypc::to_json(pr.f.vec())}});
      else
        emit(json{{"f", hypc::to_json(pr.f.vec())}});
    } else if (*c_mu) {
      auto f = load_functional(f_path, do_normalize);
      emit(hypc::to_json(hypc::make_mu(f, mu_i)));
    } else if (*c_quot) {
      auto f = load_functional(f_path, do_normalize);
      auto g = hypc::func_from_json(load_json(g_path));
      auto qi = hypc::quotient_apply(f, g, quot_m);
      json values = json::array();
      for (const auto& v : qi.values) values.push_back(hypc::to_json(v));
      hypc::Rational mem = f.coeff(1) * qi.limit;
      auto head = hypc::quotient_apply(f, g, f.support());
      for (std::size_t i = 1; i + 1 <= f.support(); ++i)
        mem += f.coeff(i + 1) * head.values[i - 1];
      emit(json{{"values", values},
                {"limit", hypc::to_json(qi.limit)},
                {"membership", mem == 0}});
    } else if (*c_verify) {
      auto f = load_functional(f_path, do_normalize);
      emit(hypc::to_json(hypc::verify_functional(f, trunc, tol, depth)));
    } else if (*c_corpus) {
      auto grid = hypc::functional_grid(max_den, max_support);
      json fs = json::array();
      for (const auto& f : grid) fs.push_back(hypc::to_json(f.vec()));
      emit(json{{"count", grid.size()}, {"functionals", fs}});
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;  // --help is not an error
  } catch (const hypc::DomainError& e) {
    emit(json{{"error", hypc::errc_name(e.code())}, {"detail", e.detail()}});
    return 1;
  } catch (const hypc::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
