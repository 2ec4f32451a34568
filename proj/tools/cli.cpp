#include "cli.hpp"

#include "cache.hpp"
#include "selftest.hpp"

#include <verlinde/cartan.hpp>
#include <verlinde/error.hpp>
#include <verlinde/json_io.hpp>
#include <verlinde/padic.hpp>
#include <verlinde/temperley_lieb.hpp>
#include <verlinde/tilting.hpp>
#include <verlinde/verlinde_ring.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>

namespace verlinde::cli {

namespace {

constexpr int kSchemaVersion = 1;

struct Config {
  int p = 0;
  int N = 1;
  int n = 1;
  int zeta_sqrt = 0;
  std::string format = "json";
  std::string cache_dir;
  std::string command;
  std::vector<std::int64_t> args;

  std::string canonical_key() const {
    std::ostringstream os;
    os << command << "-v" << kSchemaVersion << "-p" << p << "-N" << N << "-n" << n << "-z" << zeta_sqrt;
    for (auto a : args) os << "-" << a;
    return os.str();
  }
};

std::vector<int> msf_digits(const PlExpansion& e) { return {e.digits.rbegin(), e.digits.rend()}; }

// -- commands ---------------------------------------------------------------

Json cmd_expand(const Levels& lv, std::int64_t v) {
  const auto e = pl_expand(lv, v);
  return Json{{"value", v}, {"digits", msf_digits(e)}, {"order", "most-significant-first"}};
}

Json cmd_descendants(const Levels& lv, std::int64_t v) {
  return Json{{"value", v}, {"descendants", descendants(lv, v)}};
}

Json cmd_fuse(const Levels& lv, std::int64_t a, std::int64_t b) {
  require(a >= 0 && b >= 0, "weights must be non-negative");
  return Json{{"a", a}, {"b", b}, {"summands", tilting_json(fuse(lv, a, b))}};
}

Json cmd_simples(const VerlindeRing& ring) {
  Json rows = Json::array();
  for (int a = 0; a < ring.rank(); ++a) {
    rows.push_back(Json{{"index", a},
                        {"digits", msf_digits(pl_expand(ring.levels(), a))},
                        {"class", poly_json(ring.simple_class(a).poly)},
                        {"cover", ring.projective_cover_index(a)},
                        {"fpdim", float_json(ring.fpdim_simple(a))}});
  }
  return Json{{"rank", ring.rank()}, {"modulus", poly_json(ring.modulus())}, {"simples", rows}};
}

Json cmd_fuse_simples(const VerlindeRing& ring, std::int64_t a, std::int64_t b) {
  const auto m = ring.fuse_simples(a, b);
  Json terms = Json::array();
  for (std::size_t c = 0; c < m.size(); ++c)
    if (m[c] != 0) terms.push_back(Json{{"simple", c}, {"multiplicity", integer_json(m[c])}});
  return Json{{"a", a}, {"b", b}, {"product", terms}};
}

Json cmd_covers(const VerlindeRing& ring) {
  Json rows = Json::array();
  for (int a = 0; a < ring.rank(); ++a) rows.push_back(Json{{"simple", a}, {"cover", ring.projective_cover_index(a)}});
  const auto& lv = ring.levels();
  return Json{{"range", {projective_first(lv), projective_last(lv)}}, {"covers", rows}};
}

Json cmd_fpdim(const VerlindeRing& ring) {
  Json rows = Json::array();
  double sum = 0;
  for (int a = 0; a < ring.rank(); ++a) {
    const double d = ring.fpdim_simple(a);
    sum += d * ring.fpdim(ring.tilting_class(ring.projective_cover_index(a)));
    rows.push_back(Json{{"simple", a}, {"fpdim", float_json(d)}});
  }
  return Json{{"category", float_json(ring.fpdim_category())}, {"projective_sum", float_json(sum)}, {"simples", rows}};
}

Json cmd_qdim(const ParamContext& ctx, const VerlindeRing& ring) {
  Json rows = Json::array();
  for (int a = 0; a < ring.rank(); ++a) {
    const auto digit = qdim_simple(ctx, a);
    const auto eval = qdim_by_evaluation(ctx, ring, a);
    rows.push_back(Json{{"simple", a},
                        {"digit_formula", scalar_json(digit)},
                        {"by_evaluation", scalar_json(eval)},
                        {"agree", digit == eval}});
  }
  Json out{{"field", field_json(*ctx.field)}, {"sigma", ctx.sigma}, {"simples", rows}};
  const auto g = ring.fermion_index();
  out["fermion"] = g > 0 ? Json(g) : Json(nullptr);
  return out;
}

Json cmd_stable_gr(const Levels& lv) {
  require(lv.n >= 2, "stable-gr needs n >= 2");
  const auto s = stable_modulus(lv);
  Json out{{"generator", s.generator.coeffs()},
           {"dimension", s.dimension},
           {"expected", lv.power(lv.n - 1) - 1},
           {"closed_form_dimension", stable_decomposition_dimension(lv)}};
  if (lv.ell != lv.p) {
    const auto d = stable_decomposition(lv);
    out["decomposition"] = Json{{"q_ell_multiplicity", d.q_ell_multiplicity},
                                {"local_dimension", d.local_dimension},
                                {"rest_dimension", d.rest_dimension},
                                {"rest_root_multiplicities", d.rest_root_multiplicities},
                                {"rest_supported", d.rest_supported}};
  }
  return out;
}

Json cmd_subcategories(const Levels& lv) { return Json{{"subcategories", tensor_subcategories(lv)}}; }

Json cmd_tl_check(const ParamContext& ctx) {
  require(ctx.ell == 2, "tl-check needs l = 2, i.e. N = 4");
  const tl::Category T(ctx);
  const auto E = T.nilpotent_E();
  return Json{{"identity", "beta2-E"},
              {"holds", T.check_symmetric_center_identity()},
              {"control_holds", T.check_symmetric_center_control()},
              {"E_nonzero", !E.is_zero()},
              {"E_squared_zero", T.compose(E, E).is_zero()},
              {"zeta_sqrt", scalar_json(ctx.zeta_sqrt)}};
}

// -- rendering ----------------------------------------------------------------

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool all_scalars(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
}

void render_table(const Json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_primitive()) {
      out << indent << key << ": " << scalar_text(value) << "\n";
    } else if (value.is_array() && all_scalars(value)) {
      out << indent << key << ":";
      for (const auto& x : value) out << " " << scalar_text(x);
      out << "\n";
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& [k, v] : value.front().items()) cols.push_back(k);
      out << indent << " ";
      for (const auto& c : cols) out << " " << c;
      out << "\n";
      for (const auto& row : value) {
        out << indent << " ";
        for (const auto& c : cols) {
          const Json& cell = row.at(c);
          out << " ";
          if (cell.is_primitive()) out << scalar_text(cell);
          else out << cell.dump();
        }
        out << "\n";
      }
    } else if (value.is_array()) {
      out << indent << key << ":\n";
      for (const auto& row : value) {
        out << indent << " ";
        if (row.is_array() && all_scalars(row))
          for (const auto& x : row) out << " " << scalar_text(x);
        else out << " " << row.dump();
        out << "\n";
      }
    } else {
      out << indent << key << ":\n";
      render_table(value, out, indent + "  ");
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"verlinde-lab: computations in higher Verlinde categories"};
  app.set_help_all_flag("--help-all");
  app.fallthrough();
  app.add_option("--p", cfg.p, "characteristic p (prime)")->required();
  app.add_option("--N", cfg.N, "order of zeta (p must not divide N)");
  app.add_option("--n", cfg.n, "level n >= 1");
  app.add_option("--zeta-sqrt", cfg.zeta_sqrt, "square root selector; odd picks the other root");
  app.add_option("--format", cfg.format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir, "directory for cached tables");
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
    std::vector<const char*> positional;
  };
  const std::vector<Spec> specs{
      {"expand", "mixed-radix digits of v", {"v"}},
      {"descendants", "reflection descendants of v", {"v"}},
      {"fuse", "decompose T(a) (x) T(b)", {"a", "b"}},
      {"cartan", "Cartan matrix over the projective range", {}},
      {"blocks", "block decomposition", {}},
      {"simples", "simple objects and their classes", {}},
      {"fuse-simples", "decompose L(a) (x) L(b)", {"a", "b"}},
      {"covers", "projective covers", {}},
      {"fpdim", "Frobenius-Perron dimensions", {}},
      {"qdim", "quantum dimensions in the field", {}},
      {"stable-gr", "stable Grothendieck ring over F_p", {}},
      {"subcategories", "tensor subcategories", {}},
      {"tl-check", "symmetric-centre identity in Temperley-Lieb", {}},
      {"selftest", "run the module invariants", {}},
  };
  std::vector<std::int64_t> positional_values(2, 0);
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    for (std::size_t i = 0; i < s.positional.size(); ++i)
      sub->add_option(s.positional[i], positional_values[i])->required();
    sub->callback([&cfg, &s, &positional_values] {
      cfg.command = s.name;
      cfg.args.assign(positional_values.begin(), positional_values.begin() + static_cast<long>(s.positional.size()));
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::invalid_parameters;
  }

  try {
    const Levels lv = derive_levels(cfg.p, cfg.N, cfg.n);
    const bool csv = cfg.format == "csv";
    require(!csv || cfg.command == "cartan" || cfg.command == "blocks", "csv output is only available for cartan and blocks");

    if (cfg.command == "selftest") {
      std::optional<ParamContext> ctx;
      try {
        ctx = make_context(cfg.p, cfg.N, cfg.n, cfg.zeta_sqrt);
      } catch (const InvalidArgument& e) {
        err << "warning: field-valued checks skipped: " << e.what() << "\n";
      }
      const auto results = run_selftest(lv, ctx);
      bool all = true;
      Json rows = Json::array();
      for (const auto& r : results) {
        all = all && r.pass;
        Json row{{"name", r.name}, {"pass", r.pass}};
        if (!r.detail.empty()) row["detail"] = r.detail;
        rows.push_back(row);
      }
      const Json doc{{"schema", "verlinde-lab/selftest/v1"}, {"passed", all}, {"checks", rows}};
      if (cfg.format == "table")
        for (const auto& r : results) out << (r.pass ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
      else out << doc.dump(2) << "\n";
      return all ? ExitCode::ok : ExitCode::consistency_failure;
    }

    if (csv) {
      out << (cfg.command == "cartan" ? cartan_to_csv(cartan_matrix(lv)) : blocks_to_csv(block_partition(lv)));
      return ExitCode::ok;
    }

    auto compute = [&]() -> Json {
      const auto& a = cfg.args;
      Json result;
      const std::string& c = cfg.command;
      if (c == "expand") result = cmd_expand(lv, a[0]);
      else if (c == "descendants") result = cmd_descendants(lv, a[0]);
      else if (c == "fuse") result = cmd_fuse(lv, a[0], a[1]);
      else if (c == "cartan") result = cartan_json(cartan_matrix(lv));
      else if (c == "blocks") result = blocks_json(block_partition(lv));
      else if (c == "stable-gr") result = cmd_stable_gr(lv);
      else if (c == "subcategories") result = cmd_subcategories(lv);
      else if (c == "tl-check") result = cmd_tl_check(make_context(cfg.p, cfg.N, cfg.n, cfg.zeta_sqrt));
      else {
        const VerlindeRing ring(lv);
        if (c == "simples") result = cmd_simples(ring);
        else if (c == "fuse-simples") result = cmd_fuse_simples(ring, a[0], a[1]);
        else if (c == "covers") result = cmd_covers(ring);
        else if (c == "fpdim") result = cmd_fpdim(ring);
        else if (c == "qdim") result = cmd_qdim(make_context(cfg.p, cfg.N, cfg.n, cfg.zeta_sqrt), ring);
        else throw ConsistencyError("unknown command " + c);
      }
      Json params{{"p", cfg.p}, {"N", cfg.N}, {"n", cfg.n}, {"ell", lv.ell}, {"zeta_sqrt", cfg.zeta_sqrt}};
      return Json{{"schema", "verlinde-lab/" + c + "/v" + std::to_string(kSchemaVersion)},
                  {"params", params},
                  {"result", result}};
    };

    Json doc;
    if (!cfg.cache_dir.empty()) {
      ResultCache cache(cfg.cache_dir, err);
      doc = cache.get_or_compute(cfg.canonical_key(), compute);
    } else {
      doc = compute();
    }

    if (cfg.format == "table") render_table(doc.at("result"), out, "");
    else out << doc.dump(2) << "\n";

    if (cfg.command == "tl-check" && !doc["result"]["holds"].get<bool>()) return ExitCode::consistency_failure;
    return ExitCode::ok;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::invalid_parameters;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return ExitCode::consistency_failure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return ExitCode::consistency_failure;
  }
}

}  // namespace verlinde::cli
