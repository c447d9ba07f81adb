#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "posguess/error.hpp"
#include "posguess/eval.hpp"
#include "posguess/guesser.hpp"
#include "posguess/induction.hpp"
#include "posguess/lexicon.hpp"
#include "posguess/report_io.hpp"
#include "posguess/rule_io.hpp"
#include "posguess/scoring.hpp"
#include "posguess/sweep.hpp"
#include "posguess/text.hpp"

namespace posguess::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned jobs = 1;
  bool timing = false;
  bool dump_config = false;

  std::string lexicon_path;
  std::string freqs_path;
  std::string rules_path;
  std::string out_path;
  std::string closed_class;  // comma-separated override of the default list
  int min_len = kDefaultMinEvalLength;

  // induce
  std::string kind = "suffix";
  int mutation = 0;
  std::int64_t theta_f = kDefaultThetaF;
  int max_ending = kDefaultMaxEndingLength;

  // score / sweep
  std::optional<double> theta_s;
  std::vector<double> grid = default_sweep_grid();
  std::string selected_out;

  // guess / eval
  std::vector<std::string> stages;
  std::string input_path;
  bool explain = false;
  bool no_lowercase = false;
  std::string fallback_common = "NN";
  std::string fallback_proper = "NP";
  std::string tsv_path;
  std::string tagging_tsv_path;
  bool json = false;
  std::string gold_path;
  std::string pred_path;
  int percent_digits = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Prefixes parse errors with the file they came from.
template <class Fn>
auto parse_file(const std::string& path, Fn&& parse) {
  std::istringstream in(read_file(path));
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.message());
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
  if (!file) throw IoError("failed writing '" + path + "'");
}

Lexicon load_lexicon(const RunConfig& cfg) {
  if (cfg.lexicon_path.empty()) throw IoError("--lexicon is required");
  Lexicon lexicon = parse_file(cfg.lexicon_path, [](std::istream& in) { return parse_lexicon(in); });
  if (!cfg.closed_class.empty()) {
    const TagSet closed = TagSet::from_list(cfg.closed_class);
    lexicon.set_closed_class_tags({closed.tags().begin(), closed.tags().end()});
  }
  return lexicon;
}

FrequencyTable load_freqs(const std::string& path) {
  return parse_file(path, [](std::istream& in) { return parse_frequencies(in); });
}

RuleSet load_rules(const std::string& path) {
  return parse_file(path, [](std::istream& in) { return read_rules(in); });
}

std::string rules_text(const RuleSet& rs) {
  std::ostringstream s;
  write_rules(s, rs);
  return s.str();
}

// "FILE" or "FILE@THETA".
RuleSet load_stage(const std::string& arg) {
  const auto at = arg.rfind('@');
  if (at != std::string::npos) {
    double theta = 0.0;
    bool numeric = true;
    try {
      theta = parse_double(std::string_view(arg).substr(at + 1));
    } catch (const std::invalid_argument&) {
      numeric = false;
    }
    if (numeric) return threshold_filter(load_rules(arg.substr(0, at)), theta);
  }
  return load_rules(arg);
}

std::string label(const RuleSet& rs, double theta) {
  return std::string(1, ruleset_label(rs)) + std::to_string(std::lround(theta * 100.0));
}

int cmd_induce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Lexicon lexicon = load_lexicon(cfg);
  const RuleKind kind = kind_from_name(cfg.kind);
  RuleSet all = kind == RuleKind::Ending
                    ? extract_ending_rules(lexicon, cfg.max_ending, 1, cfg.min_len, cfg.jobs)
                    : extract_morph_rules(lexicon, kind, cfg.mutation, 1, cfg.jobs);
  const auto candidates = all.rules.size();
  RuleSet kept = filter_by_frequency(std::move(all), cfg.theta_f);
  err << "candidates: " << candidates << "\nkept (f >= " << cfg.theta_f
      << "): " << kept.rules.size() << '\n';
  write_output(cfg.out_path, rules_text(kept), out);
  return kExitOk;
}

int cmd_score(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Lexicon lexicon = load_lexicon(cfg);
  const FrequencyTable freqs = load_freqs(cfg.freqs_path);
  RuleSet scored = score_ruleset(load_rules(cfg.rules_path), lexicon, freqs, cfg.jobs);
  err << "scored: " << scored.rules.size() << '\n';
  if (cfg.theta_s) {
    scored = threshold_filter(scored, *cfg.theta_s);
    err << "kept (score > " << format_double(*cfg.theta_s) << "): " << scored.rules.size()
        << '\n';
  }
  write_output(cfg.out_path, rules_text(scored), out);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Lexicon lexicon = load_lexicon(cfg);
  const FrequencyTable freqs = load_freqs(cfg.freqs_path);
  RuleSet rules = load_rules(cfg.rules_path);
  if (std::any_of(rules.rules.begin(), rules.rules.end(),
                  [](const GuessingRule& r) { return !r.scored(); }))
    rules = score_ruleset(rules, lexicon, freqs, cfg.jobs);
  const SweepResult sweep = sweep_thresholds(rules, lexicon, freqs, cfg.grid, cfg.min_len, cfg.jobs);

  std::ostringstream tsv;
  write_sweep_tsv(tsv, sweep.rows);
  write_output(cfg.out_path, tsv.str(), out);

  const SweepRow& best = sweep.rows[sweep.selected];
  err << "selected theta_s=" << format_double(best.theta_s) << " ("
      << label(rules, best.theta_s) << "), rules=" << best.rule_count << '\n';
  if (!cfg.selected_out.empty())
    write_output(cfg.selected_out, rules_text(threshold_filter(rules, best.theta_s)), out);
  return kExitOk;
}

CascadeConfig cascade_config(const RunConfig& cfg) {
  CascadeConfig cc;
  for (const auto& arg : cfg.stages) cc.stages.push_back(load_stage(arg));
  cc.fallback_common = cfg.fallback_common;
  cc.fallback_proper = cfg.fallback_proper;
  cc.lowercase_input = !cfg.no_lowercase;
  return cc;
}

std::string provenance_field(const GuessResult& g) {
  if (!g.covered()) return std::string(provenance_name(g.provenance));
  const auto& r = *g.rule;
  std::string p = "stage" + std::to_string(g.stage + 1) + ":" + kind_code(r.kind) + ":" + r.affix;
  if (r.kind == RuleKind::Suffix) p += ":" + (r.mutation.empty() ? std::string("-") : r.mutation);
  return p;
}

int cmd_guess(const RunConfig& cfg, bool explain, std::istream& in, std::ostream& out) {
  const Lexicon lexicon = load_lexicon(cfg);
  const Cascade cascade(cascade_config(cfg));

  std::string text;
  if (cfg.input_path.empty() || cfg.input_path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    text = read_file(cfg.input_path);
  }
  std::vector<WordQuery> words;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    const auto word = trim(line);
    if (word.empty()) continue;
    words.push_back({std::string(word), is_ascii_upper(word.front())});
  }

  const auto results = batch_guess(words, cascade, lexicon, cfg.jobs);
  std::string body;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& g = results[i];
    body += words[i].word + '\t' + g.pos.to_list() + '\t' + provenance_field(g);
    if (explain) {
      if (g.covered()) {
        const std::string matched = cfg.no_lowercase ? words[i].word : ascii_lower(words[i].word);
        const auto stem = rule_stem(*g.rule, matched);
        body += '\t' + describe(*g.rule) + "\tstem=" + (stem ? *stem : std::string("-"));
      } else {
        body += "\t-\tstem=-";
      }
    }
    body += '\n';
  }
  write_output(cfg.out_path, body, out);
  return kExitOk;
}

std::vector<std::pair<std::string, Tag>> read_tagged(const std::string& path) {
  return parse_file(path, [](std::istream& in) {
    std::vector<std::pair<std::string, Tag>> tokens;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      const auto line = strip_cr(raw);
      if (trim(line).empty()) continue;
      const auto f = split(line, '\t');
      if (f.size() != 2 || f[0].empty() || f[1].empty())
        throw ParseError(line_no, "expected token<TAB>tag");
      tokens.emplace_back(std::string(f[0]), std::string(f[1]));
    }
    return tokens;
  });
}

std::string percent(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f%%", digits, v * 100.0);
  return buf;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const Lexicon lexicon = load_lexicon(cfg);
  if (cfg.gold_path.empty() != cfg.pred_path.empty())
    throw std::invalid_argument("--gold and --pred must be given together");

  std::vector<EvalReport> reports;
  {
    const Cascade cascade(cascade_config(cfg));
    if (cfg.freqs_path.empty()) {
      reports.push_back(evaluate_lexicon(cascade, lexicon, cfg.min_len, cfg.jobs));
    } else {
      const auto [lex, cor] =
          evaluate_both(cascade, lexicon, load_freqs(cfg.freqs_path), cfg.min_len, cfg.jobs);
      reports = {lex, cor};
    }
  }

  std::optional<TaggingScore> tagging;
  if (!cfg.gold_path.empty()) {
    const auto gold = read_tagged(cfg.gold_path);
    const auto pred = read_tagged(cfg.pred_path);
    if (gold.size() != pred.size())
      throw std::invalid_argument("gold has " + std::to_string(gold.size()) +
                                  " tokens but pred has " + std::to_string(pred.size()));
    std::vector<Tag> predicted;
    std::vector<bool> unknown;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      if (gold[i].first != pred[i].first)
        throw std::invalid_argument("token " + std::to_string(i + 1) +
                                    " differs between gold and pred");
      predicted.push_back(pred[i].second);
      unknown.push_back(!lexicon.contains(gold[i].first));
    }
    tagging = tagging_scores(gold, predicted, unknown);
  }

  if (!cfg.tsv_path.empty()) {
    std::ostringstream tsv;
    write_eval_tsv(tsv, reports);
    write_output(cfg.tsv_path, tsv.str(), out);
  }
  if (!cfg.tagging_tsv_path.empty()) {
    if (!tagging) throw std::invalid_argument("--tagging-tsv needs --gold and --pred");
    std::ostringstream tsv;
    write_tagging_tsv(tsv, *tagging);
    write_output(cfg.tagging_tsv_path, tsv.str(), out);
  }

  std::ostringstream text;
  if (cfg.json) {
    text << eval_json(reports, tagging ? &*tagging : nullptr) << '\n';
  } else {
    write_eval_table(text, reports);
    if (tagging) {
      text << "tagging  total " << percent(tagging->total_score, cfg.percent_digits)
           << "  unknown " << percent(tagging->unknown_score, cfg.percent_digits) << "  ("
           << tagging->total_words << " words, " << tagging->unknown_words << " unknown, "
           << tagging->total_mistagged << " mistagged, " << tagging->unknown_mistagged
           << " unknown mistagged)\n";
    }
  }
  write_output(cfg.out_path, text.str(), out);
  return kExitOk;
}

void add_lexicon_options(CLI::App* cmd, RunConfig& cfg, bool with_min_len) {
  cmd->add_option("--lexicon", cfg.lexicon_path, "Lexicon TSV (word<TAB>tags)")->required();
  cmd->add_option("--closed-class", cfg.closed_class,
                  "Comma-separated closed-class tags replacing the default list");
  if (with_min_len)
    cmd->add_option("--min-len", cfg.min_len, "Minimum eval-target word length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_cascade_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--stage", cfg.stages,
                  "Rule file for the next cascade stage, optionally FILE@THETA to keep rules "
                  "scoring above THETA (repeat; order matters)");
  cmd->add_flag("--no-lowercase", cfg.no_lowercase, "Match words without lowercasing");
  cmd->add_option("--fallback-common", cfg.fallback_common, "Tag for uncapitalised misses")
      ->capture_default_str();
  cmd->add_option("--fallback-proper", cfg.fallback_proper, "Tag for capitalised misses")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Learn and apply unknown-word POS guessing rules", "posguess"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML configuration file (flags take precedence)");
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_flag("--timing", cfg.timing, "Print elapsed time on standard error");
  app.add_flag("--dump-config", cfg.dump_config, "Print the effective configuration and exit");

  auto* induce = app.add_subcommand("induce", "Extract guessing rules from a lexicon");
  add_lexicon_options(induce, cfg, true);
  induce->add_option("--kind", cfg.kind, "prefix, suffix or ending")
      ->check(CLI::IsMember({"prefix", "suffix", "ending"}))
      ->capture_default_str();
  induce->add_option("--mutation", cfg.mutation, "Mutation length for suffix rules")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  induce->add_option("--theta-f", cfg.theta_f, "Minimum rule frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  induce->add_option("--max-ending", cfg.max_ending, "Longest ending for ending rules")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  induce->add_option("--out,-o", cfg.out_path, "Rule file to write (default stdout)");

  auto* score_cmd = app.add_subcommand("score", "Score rules against lexicon and corpus counts");
  add_lexicon_options(score_cmd, cfg, false);
  score_cmd->add_option("--rules", cfg.rules_path, "Rule file")->required();
  score_cmd->add_option("--freqs", cfg.freqs_path, "Frequency TSV (word<TAB>count)")->required();
  score_cmd->add_option("--theta-s", cfg.theta_s, "Keep only rules scoring above this");
  score_cmd->add_option("--out,-o", cfg.out_path, "Scored rule file (default stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a rule-set over score thresholds");
  add_lexicon_options(sweep_cmd, cfg, true);
  sweep_cmd->add_option("--rules", cfg.rules_path, "Rule file (scored first if needed)")
      ->required();
  sweep_cmd->add_option("--freqs", cfg.freqs_path, "Frequency TSV")->required();
  sweep_cmd->add_option("--grid", cfg.grid, "Ascending thresholds, comma-separated")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--out,-o", cfg.out_path, "Sweep TSV (default stdout)");
  sweep_cmd->add_option("--selected-out", cfg.selected_out,
                        "Write the rules kept at the selected threshold here");

  auto* guess_cmd = app.add_subcommand("guess", "Guess POS-classes of unknown words");
  auto* explain_cmd = app.add_subcommand("explain", "guess with the firing rule and stem shown");
  for (auto* cmd : {guess_cmd, explain_cmd}) {
    add_lexicon_options(cmd, cfg, false);
    add_cascade_options(cmd, cfg);
    cmd->add_option("--input,-i", cfg.input_path, "One word per line (default stdin)");
    cmd->add_option("--out,-o", cfg.out_path, "Output TSV (default stdout)");
  }
  guess_cmd->add_flag("--explain", cfg.explain, "Add the firing rule and the stem looked up");

  auto* eval_cmd = app.add_subcommand("eval", "Precision, recall and coverage of a cascade");
  add_lexicon_options(eval_cmd, cfg, true);
  add_cascade_options(eval_cmd, cfg);
  eval_cmd->add_option("--freqs", cfg.freqs_path, "Frequency TSV for the corpus-weighted report");
  eval_cmd->add_option("--tsv", cfg.tsv_path, "Also write the reports as TSV");
  eval_cmd->add_option("--tagging-tsv", cfg.tagging_tsv_path,
                       "Write the tagging scores as TSV (needs --gold and --pred)");
  eval_cmd->add_flag("--json", cfg.json, "Print JSON instead of the table");
  eval_cmd->add_option("--gold", cfg.gold_path, "Gold token<TAB>tag file");
  eval_cmd->add_option("--pred", cfg.pred_path, "Predicted token<TAB>tag file");
  eval_cmd->add_option("--percent-digits", cfg.percent_digits, "Decimals in tagging scores")
      ->check(CLI::Range(0, 9))
      ->capture_default_str();
  eval_cmd->add_option("--out,-o", cfg.out_path, "Report destination (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (std::size_t i = 1; i < cfg.grid.size(); ++i)
      if (!(cfg.grid[i - 1] < cfg.grid[i]))
        throw CLI::ValidationError("--grid", "thresholds must be strictly ascending");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.dump_config) {
    out << app.config_to_str(true, false);
    return kExitOk;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = kExitOk;
  try {
    if (induce->parsed()) status = cmd_induce(cfg, out, err);
    else if (score_cmd->parsed()) status = cmd_score(cfg, out, err);
    else if (sweep_cmd->parsed()) status = cmd_sweep(cfg, out, err);
    else if (guess_cmd->parsed()) status = cmd_guess(cfg, cfg.explain, in, out);
    else if (explain_cmd->parsed()) status = cmd_guess(cfg, true, in, out);
    else if (eval_cmd->parsed()) status = cmd_eval(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  if (cfg.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    err << "elapsed: " << dt.count() << " s\n";
  }
  return status;
}

}  // namespace posguess::cli
