#include "taumap/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "taumap/centralizer.hpp"
#include "taumap/serialize.hpp"
#include "taumap/verify.hpp"

namespace taumap {

namespace {

using nlohmann::json;

enum class Format { text, data, csv };

struct Options {
  std::string group;
  std::string format = "text";
  std::string out_path;
  std::string entry;
  std::string stratum;
  int k = -1;
  int d = -1;
  std::string r_class = "generic";
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "data") return Format::data;
  if (s == "csv") return Format::csv;
  throw InvalidParam("unknown format '" + s + "'");
}

json label_json(const TwistedType& tt, const CSLabel& x) {
  json j{{"text", render(tt, x)},
         {"char", render(x.relative_char)},
         {"index", x.cuspidal_index}};
  j["levi"] = x.levi_kind == LeviKind::empty ? json() : json(render(x.levi_type));
  j["d"] = x.d ? json(*x.d) : json();
  return j;
}

std::string do_enumerate(const TwistedType& tt, Format format) {
  const auto labels = enumerate_cs_prime(tt);
  std::string out;
  switch (format) {
    case Format::text:
      for (const auto& x : labels) out += render(tt, x) + "\n";
      return out;
    case Format::csv: {
      out = "group,levi,char,d,index,label\n";
      for (const auto& x : labels) {
        out += csv_field(render(tt)) + ',';
        out += (x.levi_kind == LeviKind::empty ? "-" : render(x.levi_type)) + ',';
        out += csv_field(render(x.relative_char)) + ',';
        out += (x.d ? std::to_string(*x.d) : "") + ',';
        out += std::to_string(x.cuspidal_index) + ',';
        out += csv_field(render(tt, x)) + '\n';
      }
      return out;
    }
    case Format::data: {
      json entries = json::array();
      for (const auto& x : labels) entries.push_back(label_json(tt, x));
      return json{{"group", render(tt)}, {"entries", entries}}.dump(2) + "\n";
    }
  }
  throw Error("unreachable");
}

std::string do_table(const TwistedType& tt, Format format) {
  const auto& table = golden_table(tt);
  switch (format) {
    case Format::text:
      return render_text(table);
    case Format::data:
      return table_to_json(table);
    case Format::csv:
      return table_to_csv(table);
  }
  throw Error("unreachable");
}

std::string do_tau(const TwistedType& tt, const std::string& entry,
                   Format format) {
  const CSLabel x = parse_cs_label(tt, entry);
  const IrrLabel image = tau(tt, x);
  switch (format) {
    case Format::text:
      return render(image) + "\n";
    case Format::data:
      return json{{"group", render(tt)},
                  {"entry", render(tt, x)},
                  {"stratum", render(image)}}
                 .dump(2) +
             "\n";
    case Format::csv:
      return "group,entry,stratum\n" + csv_field(render(tt)) + ',' +
             csv_field(render(tt, x)) + ',' + csv_field(render(image)) + '\n';
  }
  throw Error("unreachable");
}

std::string do_fiber(const TwistedType& tt, const std::string& stratum,
                     Format format) {
  const IrrLabel e = parse_label(stratum, folded_type(tt));
  const auto entries = fiber(tt, e);
  switch (format) {
    case Format::text: {
      std::string out;
      for (const auto& x : entries) out += render(tt, x) + "\n";
      return out;
    }
    case Format::data: {
      json list = json::array();
      for (const auto& x : entries) list.push_back(render(tt, x));
      return json{{"group", render(tt)},
                  {"stratum", render(e)},
                  {"entries", list}}
                 .dump(2) +
             "\n";
    }
    case Format::csv: {
      std::string out = "group,stratum,entry_kind,entry_text\n";
      for (const auto& x : entries) {
        out += csv_field(render(tt)) + ',' + csv_field(render(e)) + ',';
        out += (x.levi_kind == LeviKind::empty ? "plain" : "cuspidal");
        out += ',' + csv_field(render(tt, x)) + '\n';
      }
      return out;
    }
  }
  throw Error("unreachable");
}

std::string do_strata(const TwistedType& tt, Format format) {
  const auto heads = strata(tt);
  switch (format) {
    case Format::text: {
      std::string out;
      for (const auto& e : heads) out += render(e) + "\n";
      return out;
    }
    case Format::data: {
      json list = json::array();
      for (const auto& e : heads)
        list.push_back({{"stratum", render(e)},
                        {"box", render(component_group(tt, e))},
                        {"c_star_size", c_star(tt, e).size}});
      return json{{"group", render(tt)}, {"strata", list}}.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "group,stratum,box,c_star_size\n";
      for (const auto& e : heads)
        out += csv_field(render(tt)) + ',' + csv_field(render(e)) + ',' +
               csv_field(render(component_group(tt, e))) + ',' +
               std::to_string(c_star(tt, e).size) + '\n';
      return out;
    }
  }
  throw Error("unreachable");
}

std::string do_centralizer(const TwistedType& tt, int param, RClass r,
                           Format format) {
  const auto type = centralizer_type(tt, param, r);
  switch (format) {
    case Format::text:
      return render(type) + "\n";
    case Format::data:
      return json{{"group", render(tt)},
                  {"param", param},
                  {"r", render(r)},
                  {"type", render(type)}}
                 .dump(2) +
             "\n";
    case Format::csv:
      return "group,param,r,type\n" + csv_field(render(tt)) + ',' +
             std::to_string(param) + ',' + render(r) + ',' +
             csv_field(render(type)) + '\n';
  }
  throw Error("unreachable");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Character-sheaf labels, strata and the map between them "
               "for the twisted types 2A, 2D, 2E6 and 3D4"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool group_required = true) {
    auto* g = sub->add_option("group", opt.group,
                              "group spec: 2A:<n>, 2D:<n>, 2E6 or 3D4");
    if (group_required) g->required();
    sub->add_option("--format", opt.format, "text, data or csv")
        ->check(CLI::IsMember({"text", "data", "csv"}));
    sub->add_option("--out", opt.out_path, "write output to a file");
  };

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list all character-sheaf labels");
  add_common(cmd_enumerate);
  auto* cmd_table =
      app.add_subcommand("table", "print the stratum table (2E6/3D4)");
  add_common(cmd_table);
  auto* cmd_tau =
      app.add_subcommand("tau", "map one label to its stratum");
  add_common(cmd_tau);
  cmd_tau->add_option("--entry", opt.entry, "character-sheaf label")
      ->required();
  auto* cmd_fiber = app.add_subcommand("fiber", "list the fibre of a stratum");
  add_common(cmd_fiber);
  cmd_fiber->add_option("--stratum", opt.stratum, "stratum label")->required();
  auto* cmd_strata = app.add_subcommand("strata", "list the stratum labels");
  add_common(cmd_strata);
  auto* cmd_centralizer = app.add_subcommand(
      "centralizer", "centralizer type of a cuspidal support point");
  add_common(cmd_centralizer);
  cmd_centralizer->add_option("--k", opt.k, "classical cuspidal parameter");
  cmd_centralizer->add_option("--d", opt.d, "exceptional cuspidal d");
  cmd_centralizer->add_option("--r", opt.r_class, "characteristic: 2, 3 or generic")
      ->check(CLI::IsMember({"2", "3", "generic"}));
  auto* cmd_verify =
      app.add_subcommand("verify", "run the full verification suite");
  add_common(cmd_verify, /*group_required=*/false);

  std::vector<const char*> argv = {"taumap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::optional<TwistedType> tt_parsed;
  if (!opt.group.empty()) {
    try {
      tt_parsed = parse_twisted(opt.group);
    } catch (const Error& e) {
      err << "usage error: bad group spec '" << opt.group << "': " << e.what()
          << "\n";
      return 2;
    }
  }

  try {
    const Format format = parse_format(opt.format);
    std::string output;
    int status = 0;

    if (cmd_verify->parsed()) {
      VerifyOptions vo;
      if (tt_parsed) vo.scope = render(*tt_parsed);
      const auto report = verify_all(vo);
      switch (format) {
        case Format::text:
          output = report_to_text(report);
          break;
        case Format::data:
          output = report_to_json(report);
          break;
        case Format::csv:
          output = report_to_csv(report);
          break;
      }
      status = report.exit_status();
    } else {
      const TwistedType tt = *tt_parsed;
      if (cmd_enumerate->parsed()) {
        output = do_enumerate(tt, format);
      } else if (cmd_table->parsed()) {
        output = do_table(tt, format);
      } else if (cmd_tau->parsed()) {
        output = do_tau(tt, opt.entry, format);
      } else if (cmd_fiber->parsed()) {
        output = do_fiber(tt, opt.stratum, format);
      } else if (cmd_strata->parsed()) {
        output = do_strata(tt, format);
      } else if (cmd_centralizer->parsed()) {
        const bool want_k = tt.classical();
        if (want_k && opt.k < 0) {
          err << "usage error: " << render(tt) << " needs --k\n";
          return 2;
        }
        if (!want_k && opt.d < 0) {
          err << "usage error: " << render(tt) << " needs --d\n";
          return 2;
        }
        output = do_centralizer(tt, want_k ? opt.k : opt.d,
                                parse_r_class(opt.r_class), format);
      }
    }

    if (!opt.out_path.empty()) {
      std::ofstream file(opt.out_path);
      if (!file) throw Error("cannot open " + opt.out_path);
      file << output;
    } else {
      out << output;
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace taumap
