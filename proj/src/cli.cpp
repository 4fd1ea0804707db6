#include "theta/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "theta/cartan.hpp"
#include "theta/centralizers.hpp"
#include "theta/graded_oracle.hpp"

namespace theta {

  using json = nlohmann::ordered_json;

  std::optional<RunConfig> parse_args(std::vector<std::string> const& args,
                                      std::ostream&                   out) {
    RunConfig   cfg;
    std::string which;
    std::vector<std::string> const cases{"e6", "e8"};
    std::vector<std::string> const methods{"closed", "averaging", "direct",
                                           "all"};

    CLI::App app{"Harmonic multiplicities for the e6 and e8 theta-groups",
                 "theta"};
    app.require_subcommand(1);

    auto* mult = app.add_subcommand("mult", "multiplicity of one weight");
    mult->add_option("case", which)->required()->check(CLI::IsMember(cases));
    mult->add_option("--w", cfg.weight,
                     "comma separated weight: m1,n1,m2,n2,m3,n3 or "
                     "lambda_1..lambda_8")
        ->required()
        ->delimiter(',');
    mult->add_option("--method", cfg.method)->check(CLI::IsMember(methods));
    mult->add_option("--format", cfg.format)
        ->check(CLI::IsMember({"json", "csv"}));

    auto* table = app.add_subcommand("table", "every weight up to a bound");
    table->add_option("case", which)->required()->check(CLI::IsMember(cases));
    table->add_option("--max", cfg.max_entry, "largest entry")
        ->check(CLI::NonNegativeNumber);
    table->add_option("--method", cfg.method)->check(CLI::IsMember(methods));
    table->add_option("--format", cfg.format)
        ->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);

    auto* oracle
        = app.add_subcommand("oracle", "brute-force decomposition of Sym^d");
    oracle->add_option("case", which)->required()->check(CLI::IsMember(cases));
    oracle->add_option("--degree", cfg.degree, "largest degree")
        ->check(CLI::NonNegativeNumber);
    oracle->add_option("--label", cfg.label, "harmonic series for this weight")
        ->delimiter(',');
    oracle->add_option("--format", cfg.format)
        ->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "structural checks");
    verify->add_option("check", cfg.check)
        ->required()
        ->check(CLI::IsMember({"group", "cartan"}));
    verify->add_option("case", which)->check(CLI::IsMember(cases));
    verify->add_option("--format", cfg.format)
        ->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        out << app.help();
        return std::nullopt;
      }
      throw UsageError(e.what());
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (!which.empty()) {
      cfg.which = which == "e6" ? Case::e6 : Case::e8;
    }
    if (cfg.subcommand == "verify" && cfg.check == "cartan") {
      if (verify->count("--format") == 0) {
        cfg.format = "text";
      }
    } else if (cfg.format == "text") {
      throw UsageError("text output is only available for verify cartan");
    }
    return cfg;
  }

  namespace {
    json big(BigInt const& x) {
      if (x.fits_slong_p()) {
        return x.get_si();
      }
      return to_string(x);
    }

    std::string csv_value(std::optional<BigInt> const& x) {
      return x ? to_string(*x) : "";
    }

    Routes routes_for(RunConfig const& cfg) {
      if (cfg.method == "direct" && cfg.which == Case::e6) {
        throw UsageError("method direct is only defined for e8");
      }
      if (cfg.method == "all") {
        return {true, true, cfg.which == Case::e8};
      }
      return {cfg.method == "closed", cfg.method == "averaging",
              cfg.method == "direct"};
    }

    E6Weight e6_weight(std::vector<int> const& w) {
      if (w.size() != 6) {
        throw UsageError("an e6 weight has six entries m1,n1,m2,n2,m3,n3");
      }
      std::array<int, 6> a{};
      std::copy(w.begin(), w.end(), a.begin());
      return E6Weight(a);
    }

    HighestWeight e8_weight(std::vector<int> w) {
      if (w.size() == 8) {
        w.push_back(0);
      }
      if (w.size() != 9) {
        throw UsageError("an e8 weight has eight (or nine) entries");
      }
      return HighestWeight(std::move(w));
    }

    json report_json(MultiplicityReport const& r) {
      json row;
      row["weight"] = r.weight;
      row["dim"]    = to_string(r.dim);
      if (r.closed) {
        row["closed"] = big(*r.closed);
      }
      if (r.averaging) {
        row["averaging"] = big(*r.averaging);
      }
      if (r.direct) {
        row["direct"] = big(*r.direct);
      }
      row["agree"] = r.agree;
      return row;
    }

    void write_csv(std::vector<MultiplicityReport> const& rows, Case which,
                   Routes routes, std::ostream& out) {
      std::size_t const width = which == Case::e6 ? 6 : 9;
      for (std::size_t i = 0; i < width; ++i) {
        out << "w" << i + 1 << ",";
      }
      out << "dim";
      if (routes.closed) {
        out << ",closed";
      }
      if (routes.averaging) {
        out << ",averaging";
      }
      if (routes.direct) {
        out << ",direct";
      }
      out << ",agree\n";
      for (auto const& r : rows) {
        for (int x : r.weight) {
          out << x << ",";
        }
        out << to_string(r.dim);
        if (routes.closed) {
          out << "," << csv_value(r.closed);
        }
        if (routes.averaging) {
          out << "," << csv_value(r.averaging);
        }
        if (routes.direct) {
          out << "," << csv_value(r.direct);
        }
        out << "," << (r.agree ? "true" : "false") << "\n";
      }
    }

    int run_mult(RunConfig const& cfg, std::ostream& out) {
      Routes const       routes = routes_for(cfg);
      MultiplicityReport r      = *cfg.which == Case::e6
                                      ? e6_report(e6_weight(cfg.weight), routes)
                                      : e8_report(e8_weight(cfg.weight), routes);
      if (cfg.format == "csv") {
        write_csv({r}, *cfg.which, routes, out);
      } else {
        json doc;
        doc["case"] = to_string(*cfg.which);
        doc.update(report_json(r));
        out << doc.dump(2) << "\n";
      }
      return r.agree ? exit_ok : exit_disagreement;
    }

    int run_table(RunConfig const& cfg, std::ostream& out) {
      Routes const routes = routes_for(cfg);
      auto const   rows
          = report({*cfg.which, cfg.max_entry}, routes, cfg.threads);
      if (cfg.format == "csv") {
        write_csv(rows, *cfg.which, routes, out);
      } else {
        json doc;
        doc["case"]    = to_string(*cfg.which);
        doc["results"] = json::array();
        for (auto const& r : rows) {
          doc["results"].push_back(report_json(r));
        }
        out << doc.dump(2) << "\n";
      }
      bool const agree = std::all_of(rows.begin(), rows.end(),
                                     [](auto const& r) { return r.agree; });
      return agree ? exit_ok : exit_disagreement;
    }

    int run_oracle(RunConfig const& cfg, std::ostream& out) {
      Case const   which = *cfg.which;
      GradedOracle oracle(which, cfg.degree);
      bool         ok = true;

      std::optional<Weight> label;
      std::optional<BigInt> closed;
      if (!cfg.label.empty()) {
        if (which == Case::e6) {
          E6Weight const w = e6_weight(cfg.label);
          label            = Weight(w.entries().begin(), w.entries().end());
          closed           = e6_closed_form(w);
        } else {
          HighestWeight const w = e8_weight(cfg.label);
          label  = Weight(w.entries().begin(), w.entries().end());
          closed = e8_closed_form(w);
        }
      }

      if (cfg.format == "csv") {
        out << "degree,label,multiplicity\n";
        for (int d = 0; d <= oracle.max_degree(); ++d) {
          ok = ok && oracle.dimension_conserved(d);
          for (auto const& [p, m] : oracle.components(d)) {
            Weight const l = sl_label(which, p);
            out << d << ",";
            for (std::size_t i = 0; i < l.size(); ++i) {
              out << (i ? " " : "") << l[i];
            }
            out << "," << to_string(m) << "\n";
          }
        }
        return ok ? exit_ok : exit_structural;
      }

      json doc;
      doc["case"]       = to_string(which);
      doc["max_degree"] = oracle.max_degree();
      doc["degrees"]    = json::array();
      for (int d = 0; d <= oracle.max_degree(); ++d) {
        json entry;
        entry["degree"]     = d;
        entry["weights"]    = oracle.table_size(d);
        entry["dimension"]  = to_string(oracle.expected_dimension(d));
        bool const conserved = oracle.dimension_conserved(d);
        entry["conserved"]  = conserved;
        ok                  = ok && conserved;
        entry["components"] = json::array();
        for (auto const& [p, m] : oracle.components(d)) {
          entry["components"].push_back(
              {{"label", sl_label(which, p)}, {"multiplicity", big(m)}});
        }
        doc["degrees"].push_back(std::move(entry));
      }
      json inv = json::array();
      for (auto const& c : oracle.invariant_series().coefficients) {
        inv.push_back(big(c));
      }
      doc["invariant_series"] = std::move(inv);
      if (label) {
        auto const h = oracle.harmonic_series(*label);
        json       series = json::array();
        BigInt     partial = 0;
        for (auto const& c : h.coefficients) {
          series.push_back(big(c));
          partial += c;
        }
        bool const bounded = partial <= *closed;
        ok                 = ok && bounded;
        doc["harmonic"]    = {{"label", *label},
                              {"series", std::move(series)},
                              {"partial_sum", big(partial)},
                              {"closed_form", big(*closed)},
                              {"bounded", bounded}};
      }
      out << doc.dump(2) << "\n";
      return ok ? exit_ok : exit_structural;
    }

    json checks_json(std::vector<CheckResult> const& checks) {
      json out = json::array();
      for (auto const& c : checks) {
        out.push_back(
            {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      return out;
    }

    bool all_passed(std::vector<CheckResult> const& checks) {
      return std::all_of(checks.begin(), checks.end(),
                         [](auto const& c) { return c.passed; });
    }

    json matrix_json(MonomialMatrix const& g) {
      json entries = json::array();
      for (auto const& e : g.entries()) {
        entries.push_back(e.to_string());
      }
      return {{"perm", std::vector<int>(g.perm().begin(), g.perm().end())},
              {"entries", std::move(entries)}};
    }

    json eigen_json(EigenvalueMultiset const& e) {
      json       out    = json::array();
      auto const sorted = e.sorted();
      for (auto const& x : sorted.values()) {
        out.push_back(x.to_string());
      }
      return out;
    }

    int run_verify_group(RunConfig const& cfg, std::ostream& out) {
      json doc;
      bool ok = true;
      if (!cfg.which || *cfg.which == Case::e6) {
        auto const& group  = e6_group();
        auto const  checks = verify_e6_group(group);
        ok                 = ok && all_passed(checks);
        json elements      = json::array();
        for (auto const& g : group.elements()) {
          json factors = json::array();
          json eig     = json::array();
          for (auto const& f : g.factors) {
            factors.push_back(matrix_json(f));
            eig.push_back(eigen_json(eigenvalues(f)));
          }
          elements.push_back({{"factors", std::move(factors)},
                              {"order", g.order()},
                              {"scalar", g.is_scalar()},
                              {"eigenvalues", std::move(eig)}});
        }
        doc["e6"] = {{"order", group.order()},
                     {"checks", checks_json(checks)},
                     {"elements", std::move(elements)}};
      }
      if (!cfg.which || *cfg.which == Case::e8) {
        auto const& group  = e8_group();
        auto const  checks = verify_e8_group(group);
        ok                 = ok && all_passed(checks);
        json elements      = json::array();
        for (auto const& g : group.elements()) {
          json m           = matrix_json(g);
          m["order"]       = g.order();
          m["scalar"]      = g.is_scalar();
          m["eigenvalues"] = eigen_json(eigenvalues(g));
          elements.push_back(std::move(m));
        }
        doc["e8"] = {{"order", group.order()},
                     {"checks", checks_json(checks)},
                     {"elements", std::move(elements)}};
      }
      out << doc.dump(2) << "\n";
      return ok ? exit_ok : exit_structural;
    }

    int run_verify_cartan(RunConfig const& cfg, std::ostream& out) {
      auto const checks = verify_cartan();
      if (cfg.format == "json") {
        out << json{{"checks", checks_json(checks)}}.dump(2) << "\n";
      } else {
        for (auto const& c : checks) {
          out << (c.passed ? "PASS " : "FAIL ") << c.name;
          if (!c.detail.empty()) {
            out << ": " << c.detail;
          }
          out << "\n";
        }
      }
      return all_passed(checks) ? exit_ok : exit_structural;
    }
  }  // namespace

  int run(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
    try {
      if (cfg.subcommand == "verify") {
        return cfg.check == "group" ? run_verify_group(cfg, out)
                                    : run_verify_cartan(cfg, out);
      }
      if (!cfg.which) {
        throw UsageError(cfg.subcommand + " needs a case, e6 or e8");
      }
      if (cfg.subcommand == "mult") {
        return run_mult(cfg, out);
      }
      if (cfg.subcommand == "table") {
        if (cfg.max_entry < 0) {
          throw UsageError("--max must be nonnegative");
        }
        return run_table(cfg, out);
      }
      if (cfg.subcommand == "oracle") {
        if (cfg.degree < 0) {
          throw UsageError("--degree must be nonnegative");
        }
        return run_oracle(cfg, out);
      }
      throw UsageError("unknown subcommand " + cfg.subcommand);
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (PreconditionViolated const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (ScaleExceeded const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (Error const& e) {
      err << "structural failure: " << e.what() << "\n";
      return exit_structural;
    }
  }

  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err) {
    std::optional<RunConfig> cfg;
    try {
      cfg = parse_args(args, out);
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
    return cfg ? run(*cfg, out, err) : exit_ok;
  }

}  // namespace theta
