#include "oi/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <iomanip>     // for setw
#include <optional>    // for optional
#include <string>      // for string

#include "oi/congruence.hpp"
#include "oi/error.hpp"
#include "oi/json.hpp"
#include "oi/semigroup.hpp"
#include "oi/series.hpp"

namespace oi::cli {

  namespace {

    struct Options {
      std::string                carrier   = "int";
      std::size_t                max_rank  = 2;
      std::string                format    = "text";
      std::uint64_t              seed      = 1;
      std::size_t                cap       = cap_from_environment();
      unsigned                   threads   = 1;
      std::size_t                samples   = 200;
      std::optional<std::string> window;
      std::size_t                chains    = 100;
      std::optional<std::size_t> pairs;

      bool json() const {
        return format == "json";
      }
    };

    struct Context {
      Options const&   opts;
      Carrier          carrier;
      BoundedSemigroup semigroup;
      ScanOptions      scan;

      explicit Context(Options const& o)
          : opts(o),
            carrier(Carrier::parse(o.carrier)),
            semigroup(carrier, o.max_rank),
            scan{o.threads} {}

      std::optional<Window> window() const {
        if (opts.window) {
          return Window::parse(*opts.window);
        }
        return std::nullopt;
      }

      EnumeratedSemigroup const& enumerated() {
        if (!_enumerated) {
          if (!carrier.is_finite()) {
            throw UsageError("this needs a finite carrier (chain:<m>), not "
                             + carrier.to_string());
          }
          _enumerated.emplace(semigroup, opts.cap);
        }
        return *_enumerated;
      }

     private:
      std::optional<EnumeratedSemigroup> _enumerated;
    };

    ////////////////////////////////////////////////////////////////////////
    // Output
    ////////////////////////////////////////////////////////////////////////

    std::string scalar_text(json const& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    }

    // One line per check: `name target PASS key=value ...`; nested arrays
    // of objects become indented lines.
    void print_result(std::ostream& out, Options const& opts, json const& r) {
      if (opts.json()) {
        out << r.dump() << '\n';
        return;
      }
      out << r["check"].get<std::string>() << ' '
          << r["target"].get<std::string>() << ' '
          << (r["pass"].get<bool>() ? "PASS" : "FAIL");
      for (auto const& [key, value] : r.items()) {
        if (key == "check" || key == "target" || key == "pass") {
          continue;
        }
        if (value.is_primitive()) {
          out << ' ' << key << '=' << scalar_text(value);
        }
      }
      out << '\n';
      for (auto const& [key, value] : r.items()) {
        if (!value.is_array()) {
          continue;
        }
        for (auto const& item : value) {
          out << "  " << key << ':';
          for (auto const& [k, v] : item.items()) {
            if (v.is_primitive()) {
              out << ' ' << k << '=' << scalar_text(v);
            } else if (k == "layers") {
              for (auto const& layer : v) {
                out << " [" << layer["layer"] << ": "
                    << layer["witness_found"] << '/' << layer["samples"]
                    << ']';
              }
            }
          }
          out << '\n';
        }
      }
    }

    json result(std::string check, std::string target, bool pass) {
      return json{{"check", std::move(check)},
                  {"target", std::move(target)},
                  {"pass", pass}};
    }

    ////////////////////////////////////////////////////////////////////////
    // Checks
    ////////////////////////////////////////////////////////////////////////

    json check_enumeration(Context& ctx) {
      auto const& s     = ctx.enumerated();
      auto const  order = ctx.semigroup.order();
      auto        r     = result(
          "enumeration", ctx.semigroup.to_string(), order && *order == s.size());
      r["size"]     = s.size();
      r["expected"] = order ? json(*order) : json(nullptr);
      return r;
    }

    json check_laws(Context& ctx) {
      auto const report = check_algebra_laws(ctx.enumerated(), ctx.scan);
      auto r = result("laws", ctx.semigroup.to_string(), report.passed());
      r["checks"]             = report.checks;
      r["associativity"]      = report.associativity;
      r["inverse"]            = report.inverse;
      r["semilattice"]        = report.semilattice;
      r["natural_order"]      = report.natural_order;
      r["order_preservation"] = report.order_preservation;
      return r;
    }

    json check_green(Context& ctx) {
      auto const report = compare_green(ctx.enumerated(), ctx.scan);
      auto r = result("green", ctx.semigroup.to_string(), report.passed());
      r["pairs"]                    = report.pairs_checked;
      r["mismatches"]               = report.mismatches.size();
      r["oracle_identity_failures"] = report.oracle_identity_failures;
      return r;
    }

    json check_stability_cmd(Context& ctx) {
      auto const report = check_stability(ctx.enumerated(), ctx.scan);
      auto r = result("stability", ctx.semigroup.to_string(), report.passed());
      r["pairs"]            = report.pairs_checked;
      r["right_inclusions"] = report.right_inclusions;
      r["left_inclusions"]  = report.left_inclusions;
      r["violations"]       = report.violations.size();
      return r;
    }

    json check_ideals_cmd(Context& ctx) {
      auto const report = check_ideals(ctx.enumerated(), ctx.scan);
      auto r = result("ideals", ctx.semigroup.to_string(), report.passed());
      r["ideals"]         = report.ideals.size();
      r["all_valid"]      = report.all_valid;
      r["matches_series"] = report.matches_series;
      return r;
    }

    json check_congruences(Context& ctx) {
      auto const& s       = ctx.enumerated();
      auto const  lattice = check_congruence_lattice(s, ctx.scan, ctx.opts.cap);
      auto const  laws
          = check_congruence_laws(s, ctx.scan, ctx.opts.pairs, ctx.opts.seed);
      auto        r       = result("congruences",
                          ctx.semigroup.to_string(),
                          lattice.passed() && laws.passed());
      r["congruences"]    = lattice.congruences.size();
      r["expected"]       = lattice.expected_count;
      r["all_rees"]       = lattice.all_rees();
      r["all_compatible"] = lattice.all_compatible;
      r["pairs"]          = laws.pairs;
      if (laws.sample_seed) {
        r["pair_seed"] = *laws.sample_seed;
      }
      r["pair_failures"]  = laws.pair_failures;
      r["zero_pairs"]     = laws.zero_pairs;
      r["zero_failures"]  = laws.zero_failures;
      r["chains"]         = laws.chains;
      r["chain_failures"] = laws.chain_failures;
      return r;
    }

    json check_series(Context& ctx) {
      auto const&    opts = ctx.opts;
      SamplingConfig config;
      config.seed              = opts.seed;
      config.samples_per_layer = opts.samples;
      config.window            = ctx.window();

      bool pass = true;
      json r    = result("series", ctx.semigroup.to_string(), true);
      r["seed"] = opts.seed;

      if (ctx.carrier.is_finite()) {
        auto const& s      = ctx.enumerated();
        auto const  kernel = check_unstable_kernel(s, ctx.scan);
        r["kernel_probe_sets"] = kernel.probe_sets;
        r["kernel_witnessed"]  = kernel.witnessed;
        pass                   = pass && kernel.passed();
        std::size_t products = 0, failures = 0;
        for (std::size_t k = 0; k <= ctx.semigroup.max_rank(); ++k) {
          auto const h = verify_homomorphism(
              s, ReesQuotient(ctx.semigroup, k), ctx.scan);
          products += h.products_checked;
          failures += h.failures;
        }
        r["homomorphism_products"] = products;
        r["homomorphism_failures"] = failures;
        pass                       = pass && failures == 0;
      } else {
        Window const window = config.window.value_or(Window{-20, 20});
        auto const   chains = check_random_collapse_chains(
            window, std::min<std::size_t>(opts.max_rank, window.size()),
            opts.seed,
            opts.chains);
        r["collapse_chains"]   = chains.chains;
        r["collapse_failures"] = chains.failures;
        pass                   = pass && chains.passed();
      }

      json tight  = json::array();
      auto report = tight_series_check(ctx.semigroup, config, ctx.scan);
      pass        = pass && report.passed();
      tight.push_back(to_json(report));
      for (std::size_t k = 0; k < ctx.semigroup.max_rank(); ++k) {
        auto q = tight_series_check(
            ReesQuotient(ctx.semigroup, k), config, ctx.scan);
        pass = pass && q.passed();
        tight.push_back(to_json(q));
      }
      r["tight"] = std::move(tight);
      r["pass"]  = pass;
      return r;
    }

    using CheckFn = std::function<json(Context&)>;

    std::vector<std::pair<std::string, CheckFn>> const& checks() {
      static std::vector<std::pair<std::string, CheckFn>> const all = {
          {"enumeration", check_enumeration},
          {"laws", check_laws},
          {"green", check_green},
          {"stability", check_stability_cmd},
          {"ideals", check_ideals_cmd},
          {"congruences", check_congruences},
          {"series", check_series},
      };
      return all;
    }

    int cmd_check(Options const& opts, std::string const& which, std::ostream& out) {
      Context ctx(opts);
      bool    pass = true;
      for (auto const& [name, fn] : checks()) {
        bool selected = which == name;
        if (which == "all") {
          // only the sampled checks make sense without a finite carrier
          selected = ctx.carrier.is_finite() || name == "series";
        }
        if (!selected) {
          continue;
        }
        auto const r = fn(ctx);
        pass         = pass && r["pass"].get<bool>();
        print_result(out, opts, r);
      }
      return pass ? exit_pass : exit_fail;
    }

    ////////////////////////////////////////////////////////////////////////
    // Reports
    ////////////////////////////////////////////////////////////////////////

    std::string points_text(PointSeq const& p) {
      std::string s = "{";
      for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p[i].coord);
      }
      return s + "}";
    }

    void report_eggbox(Context& ctx, std::ostream& out) {
      auto const box = eggbox(ctx.enumerated());
      if (ctx.opts.json()) {
        out << to_json(box).dump() << '\n';
        return;
      }
      for (auto const& d : box.classes) {
        out << "rank " << d.rank << ": " << d.rows.size() << "x"
            << d.cols.size() << '\n';
        std::size_t width = 0;
        for (auto const& c : d.cols) {
          width = std::max(width, points_text(c).size());
        }
        for (std::size_t r = 0; r < d.rows.size(); ++r) {
          out << "  dom " << std::setw(static_cast<int>(width))
              << points_text(d.rows[r]) << " |";
          for (std::size_t c = 0; c < d.cols.size(); ++c) {
            out << ' ' << d.cell(r, c).size();
          }
          out << '\n';
        }
      }
    }

    void report_ideals(Context& ctx, std::ostream& out) {
      auto const report = check_ideals(ctx.enumerated(), ctx.scan);
      json       list   = json::array();
      for (std::size_t i = 0; i < report.ideals.size(); ++i) {
        auto const k = report.series_rank[i];
        list.push_back(json{{"size", report.ideals[i].count()},
                            {"rank", k ? json(*k) : json(nullptr)}});
      }
      if (ctx.opts.json()) {
        out << list.dump() << '\n';
        return;
      }
      for (auto const& i : list) {
        out << "ideal size " << i["size"] << ' '
            << (i["rank"].is_null() ? std::string("(not I_k)")
                                    : "I_" + i["rank"].dump())
            << '\n';
      }
    }

    void report_congruences(Context& ctx, std::ostream& out) {
      auto const& s   = ctx.enumerated();
      auto const  all = all_congruences(s, ctx.scan, ctx.opts.cap);
      if (ctx.opts.json()) {
        json list = json::array();
        for (auto const& c : all) {
          list.push_back(congruence_json(s, c));
        }
        out << list.dump() << '\n';
        return;
      }
      out << all.size() << " congruences\n";
      for (auto const& c : all) {
        auto const k = is_rees(s, c);
        out << "  blocks " << c.block_count() << ' '
            << (k ? "rees I_" + std::to_string(*k) : std::string("not rees"))
            << '\n';
      }
    }

    void report_quotient(Context& ctx, std::size_t k, std::ostream& out) {
      if (!ctx.carrier.is_finite()) {
        throw UsageError("report quotient needs a finite carrier");
      }
      ReesQuotient const q(ctx.semigroup, k);
      auto const         elements = q.enumerate(ctx.opts.cap);
      if (ctx.opts.json()) {
        json list = json::array();
        for (auto const& x : elements) {
          list.push_back(to_json(x));
        }
        out << json{{"threshold", k},
                    {"size", elements.size()},
                    {"elements", std::move(list)}}
                   .dump()
            << '\n';
        return;
      }
      out << ctx.semigroup.to_string() << "/I_" << k << ": "
          << elements.size() << " elements\n";
      for (auto const& x : elements) {
        out << "  " << x.to_string() << '\n';
      }
    }

    void report_chain(Context&           ctx,
                      std::string const& alpha,
                      std::string const& beta,
                      std::ostream&      out) {
      auto const a = PartialOrderIso::parse(alpha);
      auto const b = PartialOrderIso::parse(beta);
      for (auto const* x : {&a, &b}) {
        if (!ctx.semigroup.contains(*x)) {
          throw UsageError(x->to_string() + " is not an element of "
                           + ctx.semigroup.to_string());
        }
      }
      auto const chain = collapse_chain(ctx.carrier, a, b);
      if (ctx.opts.json()) {
        out << to_json(chain).dump() << '\n';
      } else {
        out << "start " << chain.start.to_string() << '\n';
        for (std::size_t m = 0; m < chain.steps.size(); ++m) {
          out << "  step " << m + 1 << ": iota " << chain.steps[m].iota
              << " -> " << chain.steps[m].next << '\n';
        }
        for (auto const& f : collapse_chain_failures(chain)) {
          out << "  failed: " << f << '\n';
        }
      }
      if (!collapse_chain_failures(chain).empty()) {
        throw std::logic_error("collapse chain is unsound");
      }
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Partial order isomorphism semigroups", "oi"};
    app.require_subcommand(1);
    Options opts;

    app.add_option("--carrier", opts.carrier, "chain:<m> or int")
        ->capture_default_str();
    app.add_option("--max-rank", opts.max_rank, "largest rank n")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opts.format, "text or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opts.seed, "sampling seed")->capture_default_str();
    app.add_option("--cap", opts.cap, "largest semigroup to enumerate (OI_CAP)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", opts.threads, "worker threads for scans")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--samples", opts.samples, "samples per layer")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--window", opts.window, "sampling window <lo>..<hi>");
    app.add_option("--chains", opts.chains, "random collapse chains on int")
        ->capture_default_str();
    app.add_option("--pairs",
                   opts.pairs,
                   "sample this many pairs for the principal congruence law")
        ->check(CLI::PositiveNumber);

    std::function<int()> action;

    auto* compose_cmd = app.add_subcommand("compose", "print the product AB");
    compose_cmd->fallthrough();
    std::string lhs, rhs;
    compose_cmd->add_option("A", lhs)->required();
    compose_cmd->add_option("B", rhs)->required();
    compose_cmd->callback([&] {
      action = [&] {
        auto const p = compose(PartialOrderIso::parse(lhs),
                               PartialOrderIso::parse(rhs));
        if (opts.json()) {
          out << to_json(p).dump() << '\n';
        } else {
          out << p << '\n';
        }
        return int(exit_pass);
      };
    });

    auto* check_cmd = app.add_subcommand("check", "run structural checks");
    check_cmd->fallthrough();
    std::string which = "all";
    std::vector<std::string> names{"all"};
    for (auto const& [name, fn] : checks()) {
      names.push_back(name);
    }
    check_cmd->add_option("which", which)
        ->capture_default_str()
        ->check(CLI::IsMember(names));
    check_cmd->callback([&] {
      action = [&] { return cmd_check(opts, which, out); };
    });

    auto* report_cmd = app.add_subcommand("report", "dump a structure");
    report_cmd->fallthrough();
    report_cmd->require_subcommand(1);
    auto add_report = [&](char const* name, char const* what) {
      auto* sub = report_cmd->add_subcommand(name, what);
      sub->fallthrough();
      return sub;
    };
    add_report("eggbox", "egg-box diagram per D-class")->callback([&] {
      action = [&] {
        Context ctx(opts);
        report_eggbox(ctx, out);
        return int(exit_pass);
      };
    });
    add_report("ideals", "every two-sided ideal")->callback([&] {
      action = [&] {
        Context ctx(opts);
        report_ideals(ctx, out);
        return int(exit_pass);
      };
    });
    add_report("congruences", "the congruence lattice")->callback([&] {
      action = [&] {
        Context ctx(opts);
        report_congruences(ctx, out);
        return int(exit_pass);
      };
    });
    std::size_t threshold = 0;
    auto*       quotient  = add_report("quotient", "elements of S/I_k");
    quotient->add_option("k", threshold)->required();
    quotient->callback([&] {
      action = [&] {
        Context ctx(opts);
        report_quotient(ctx, threshold, out);
        return int(exit_pass);
      };
    });
    std::string alpha, beta;
    auto*       chain = add_report("chain", "collapse chain from alpha to 0");
    chain->add_option("alpha", alpha)->required();
    chain->add_option("beta", beta)->required();
    chain->callback([&] {
      action = [&] {
        Context ctx(opts);
        report_chain(ctx, alpha, beta, out);
        return int(exit_pass);
      };
    });

    std::vector<std::string> argv_storage{"oi"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_storage) {
      argv.push_back(a.c_str());
    }

    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_pass;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_pass;
    } catch (CLI::ParseError const& e) {
      err << "oi: " << e.what() << '\n';
      return exit_usage;
    }

    try {
      return action();
    } catch (SizeError const& e) {
      err << "oi: " << e.what() << '\n';
      return exit_cap;
    } catch (Error const& e) {
      err << "oi: " << e.what() << '\n';
      return exit_usage;
    } catch (std::logic_error const& e) {
      err << "oi: " << e.what() << '\n';
      return exit_fail;
    }
  }

}  // namespace oi::cli
