// avoid321 command-line front end.
//
//   verify    --identity <label|all> --n-max N [--json|--csv]
//   stats     --n N --by lis|ldes|lind|sign [--json|--csv]
//   map       --which phi|psi|Phi|Psi|delshift --input <perm|ballot> [--d D] [--inverse]
//   rsk       <perm>
//   unrsk     --p <ballot> --q <ballot>
//   enumerate --n N [--lis K] [--ldes D] --emit perms|ballots|tableaux
//
// Exit status: 0 success, 1 identity violated, 2 usage or domain error.

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "avoid321/ballot.hpp"
#include "avoid321/enumeration.hpp"
#include "avoid321/errors.hpp"
#include "avoid321/involutions.hpp"
#include "avoid321/permutation.hpp"
#include "avoid321/report.hpp"
#include "avoid321/tableau.hpp"
#include "avoid321/verify.hpp"

namespace avoid321::cli {

namespace {

constexpr const char* kOutputDirEnv = "AVOID321_OUTPUT_DIR";

enum class Format { text, json, csv };

struct Common {
  bool json = false;
  bool csv = false;
  int workers = 1;
  bool allow_large = false;

  Format format() const { return json ? Format::json : csv ? Format::csv : Format::text; }
  EnumerationOptions options() const { return {workers, allow_large}; }
};

void add_format_flags(CLI::App* app, Common& c) {
  auto* j = app->add_flag("--json", c.json, "Emit JSON");
  auto* s = app->add_flag("--csv", c.csv, "Emit CSV");
  j->excludes(s);
}

void add_enumeration_flags(CLI::App* app, Common& c) {
  app->add_option("--workers", c.workers, "Concurrent enumeration slices")->check(CLI::Range(1, 64));
  app->add_flag("--allow-large", c.allow_large, "Lift the default size caps to the hard caps");
}

void warn_if_large(int n, const Common& c, std::ostream& err) {
  if (c.allow_large && n > EnumerationLimits::ballot_soft) {
    err << "warning: n = " << n << " exceeds the default cap of " << EnumerationLimits::ballot_soft
        << "; this may take a long time\n";
  }
}

std::optional<std::filesystem::path> output_dir(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::string render(const VerificationReport& r, Format f) {
  switch (f) {
    case Format::json: return to_json(r).dump(2) + "\n";
    case Format::csv: return to_csv(r);
    case Format::text: return to_text(r);
  }
  return {};
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string identity;
  int n_max = 0;
  std::string out_dir;
  bool list = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.list) {
    for (const auto& label : identity_labels()) out << label << '\n';
    return kOk;
  }
  if (a.identity.empty()) throw CLI::RequiredError("--identity");
  warn_if_large(a.n_max, a.common, err);
  std::vector<std::string> labels;
  if (a.identity == "all") {
    labels = identity_labels();
  } else {
    labels.push_back(a.identity);
  }
  const auto dir = output_dir(a.out_dir);
  const Format fmt = a.common.format();
  bool all_pass = true;
  nlohmann::ordered_json combined = nlohmann::ordered_json::array();
  std::string text;
  for (const auto& label : labels) {
    const VerificationReport report = verify(label, a.n_max, a.common.options());
    all_pass = all_pass && report.pass();
    if (fmt == Format::json) {
      for (auto& entry : to_json(report)) combined.push_back(std::move(entry));
    } else if (fmt == Format::csv && !text.empty()) {
      const std::string csv = to_csv(report);
      text += csv.substr(csv.find('\n') + 1);
    } else {
      text += render(report, fmt);
    }
    if (!report.pass()) {
      for (const auto& c : report.cases) {
        if (c.counterexample) {
          err << label << ": violated at n = " << c.n << ", counterexample: " << *c.counterexample << '\n';
          break;
        }
        if (!c.pass) {
          err << label << ": violated at n = " << c.n << '\n';
          break;
        }
      }
    }
  }
  if (fmt == Format::json) text = combined.dump(2) + "\n";

  if (dir) {
    std::filesystem::create_directories(*dir);
    const char* ext = fmt == Format::json ? ".json" : fmt == Format::csv ? ".csv" : ".txt";
    const auto path = *dir / (a.identity + ext);
    std::ofstream file(path);
    if (!file) throw Error("cannot write " + path.string());
    file << text;
    out << path.string() << '\n';
  } else {
    out << text;
  }
  return all_pass ? kOk : kViolated;
}

struct StatsArgs {
  Common common;
  int n = 0;
  std::string by;
};

int run_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
  const Statistic s = parse_statistic(a.by);
  if (s == Statistic::lind && a.n == 0) throw DomainError("lind is undefined for n = 0");
  warn_if_large(a.n, a.common, err);
  const SignedDistribution dist = signed_distribution(a.n, s, a.common.options());
  switch (a.common.format()) {
    case Format::json: out << to_json(dist, a.n, s).dump(2) << '\n'; break;
    case Format::csv: out << to_csv(dist, a.n, s); break;
    case Format::text: out << to_text(dist, a.n, s); break;
  }
  return kOk;
}

struct MapArgs {
  std::string which;
  std::string input;
  std::optional<int> d;
  bool inverse = false;
  bool json = false;
};

int run_map(const MapArgs& a, std::ostream& out) {
  nlohmann::ordered_json j;
  j["map"] = a.which;
  j["input"] = a.input;
  if (a.which == "phi" || a.which == "psi") {
    const BallotSequence b = parse_ballot(a.input);
    BallotSequence image;
    if (a.which == "phi") {
      if (a.inverse) throw CLI::ValidationError("--inverse", "phi is its own inverse");
      image = phi(b);
    } else {
      const int d = a.d.value_or(delta(b));
      image = a.inverse ? psi_inverse(b, d) : psi(b, d);
      j["d"] = d;
    }
    j["image"] = to_string(image);
    j["class_before"] = classify(b).label();
    j["class_after"] = classify(image).label();
    j["sign_before"] = ballot_sign(b);
    j["sign_after"] = ballot_sign(image);
  } else if (a.which == "Phi" || a.which == "Psi") {
    if (a.inverse) throw CLI::ValidationError("--inverse", a.which + " is an involution");
    if (a.d) throw CLI::ValidationError("--d", "only psi takes --d");
    const Permutation w = parse_permutation(a.input);
    const MapOutcome o = a.which == "Phi" ? capital_phi(w) : capital_psi(w);
    j["image"] = to_string(o.image);
    j["branch"] = to_string(o.branch);
    j["fixed"] = o.fixed;
    j["p"] = to_string(o.p_before) + " -> " + to_string(o.p_after);
    j["q"] = to_string(o.q_before) + " -> " + to_string(o.q_after);
    j["sign_before"] = sign_by_inversions(w);
    j["sign_after"] = sign_by_inversions(o.image);
  } else if (a.which == "delshift") {
    if (a.d) throw CLI::ValidationError("--d", "only psi takes --d");
    const Permutation w = parse_permutation(a.input);
    const Permutation image = a.inverse ? ldes_lind_bijection_inverse(w) : ldes_lind_bijection(w);
    j["image"] = to_string(image);
    j["ldes_before"] = ldes(w);
    j["lind_after"] = lind(image);
  } else {
    throw CLI::ValidationError("--which", "expected phi, psi, Phi, Psi or delshift");
  }
  if (a.json) {
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << j["image"].get<std::string>() << '\n';
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "map" || it.key() == "input" || it.key() == "image") continue;
    out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
  return kOk;
}

int run_rsk(const std::string& input, bool json, std::ostream& out) {
  const Permutation w = parse_permutation(input);
  const TableauPair pq = rsk(w);
  const std::string p = format_tableau_inline(pq.insertion);
  const std::string q = format_tableau_inline(pq.recording);
  const std::string pb = to_string(tableau_to_ballot(pq.insertion));
  const std::string qb = to_string(tableau_to_ballot(pq.recording));
  if (json) {
    nlohmann::ordered_json j;
    j["permutation"] = to_string(w);
    j["P"] = {{"row1", pq.insertion.row1}, {"row2", pq.insertion.row2}};
    j["Q"] = {{"row1", pq.recording.row1}, {"row2", pq.recording.row2}};
    j["p"] = pb;
    j["q"] = qb;
    out << j.dump(2) << '\n';
  } else {
    out << "P: " << p << "\nQ: " << q << "\np: " << pb << "\nq: " << qb << '\n';
  }
  return kOk;
}

int run_unrsk(const std::string& p, const std::string& q, std::ostream& out) {
  const TableauPair pair{ballot_to_tableau(parse_ballot(p)), ballot_to_tableau(parse_ballot(q))};
  out << to_string(inverse_rsk(pair)) << '\n';
  return kOk;
}

struct EnumerateArgs {
  Common common;
  int n = 0;
  std::optional<int> lis;
  std::optional<int> ldes;
  std::string emit;
};

int run_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.emit != "perms" && a.emit != "ballots" && a.emit != "tableaux") {
    throw CLI::ValidationError("--emit", "expected perms, ballots or tableaux");
  }
  check_limit(Generator::ballot, a.n, a.common.allow_large);
  warn_if_large(a.n, a.common, err);
  auto emit = [&](const Permutation& w) {
    if (a.ldes && ldes(w) != *a.ldes) return;
    if (a.emit == "perms") {
      out << to_string(w) << '\n';
      return;
    }
    const TableauPair pq = rsk(w);
    if (a.emit == "ballots") {
      out << to_string(tableau_to_ballot(pq.insertion)) << ' ' << to_string(tableau_to_ballot(pq.recording))
          << '\n';
    } else {
      out << "P: " << format_tableau_inline(pq.insertion) << " | Q: " << format_tableau_inline(pq.recording)
          << '\n';
    }
  };
  for (int k = 0; k <= a.n; ++k) {
    if (a.lis && k != *a.lis) continue;
    for_each_Tn_ballot_slice(a.n, k, emit);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign-balance toolkit for 321-avoiding permutations", "avoid321"};
  app.require_subcommand(1, 1);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check an identity for all sizes up to --n-max");
  verify_cmd->add_option("--identity", verify_args.identity, "Identity label, or 'all'");
  verify_cmd->add_option("--n-max", verify_args.n_max, "Largest size to check")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--output-dir", verify_args.out_dir,
                         std::string("Write the report here (default: $") + kOutputDirEnv + ")");
  verify_cmd->add_flag("--list", verify_args.list, "List identity labels");
  add_format_flags(verify_cmd, verify_args.common);
  add_enumeration_flags(verify_cmd, verify_args.common);

  StatsArgs stats_args;
  auto* stats_cmd = app.add_subcommand("stats", "Signed distribution of a statistic over T_n");
  stats_cmd->add_option("--n", stats_args.n, "Permutation size")->required()->check(CLI::NonNegativeNumber);
  stats_cmd->add_option("--by", stats_args.by, "lis, ldes, lind or sign")->required();
  add_format_flags(stats_cmd, stats_args.common);
  add_enumeration_flags(stats_cmd, stats_args.common);

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "Apply phi, psi, Phi, Psi or the ldes/lind bijection");
  map_cmd->add_option("--which", map_args.which, "phi, psi, Phi, Psi or delshift")->required();
  map_cmd->add_option("--input", map_args.input, "Permutation or ballot string")->required();
  map_cmd->add_option("--d", map_args.d, "Descent parameter for psi (default: delta of the input)");
  map_cmd->add_flag("--inverse", map_args.inverse, "Apply the inverse map (psi, delshift)");
  map_cmd->add_flag("--json", map_args.json, "Emit JSON");

  std::string rsk_input;
  bool rsk_json = false;
  auto* rsk_cmd = app.add_subcommand("rsk", "Tableau pair and ballot sequences of a permutation");
  rsk_cmd->add_option("permutation", rsk_input, "One-line notation")->required();
  rsk_cmd->add_flag("--json", rsk_json, "Emit JSON");

  std::string unrsk_p;
  std::string unrsk_q;
  auto* unrsk_cmd = app.add_subcommand("unrsk", "Permutation of a pair of ballot sequences");
  unrsk_cmd->add_option("--p", unrsk_p, "Insertion ballot")->required();
  unrsk_cmd->add_option("--q", unrsk_q, "Recording ballot")->required();

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "List T_n, optionally restricted by lis or ldes");
  enum_cmd->add_option("--n", enum_args.n, "Permutation size")->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--lis", enum_args.lis, "Keep only this lis");
  enum_cmd->add_option("--ldes", enum_args.ldes, "Keep only this ldes");
  enum_cmd->add_option("--emit", enum_args.emit, "perms, ballots or tableaux")->required();
  enum_cmd->add_flag("--allow-large", enum_args.common.allow_large, "Lift the default size cap");

  std::vector<const char*> argv{"avoid321"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (verify_cmd->parsed()) {
      if (!verify_args.list && verify_cmd->count("--n-max") == 0) throw CLI::RequiredError("--n-max");
      return run_verify(verify_args, out, err);
    }
    if (stats_cmd->parsed()) return run_stats(stats_args, out, err);
    if (map_cmd->parsed()) return run_map(map_args, out);
    if (rsk_cmd->parsed()) return run_rsk(rsk_input, rsk_json, out);
    if (unrsk_cmd->parsed()) return run_unrsk(unrsk_p, unrsk_q, out);
    if (enum_cmd->parsed()) return run_enumerate(enum_args, out, err);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace avoid321::cli
