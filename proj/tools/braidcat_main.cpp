// Command-line front end: braid word problem, configuration tools, free
// braided-category evaluation, the Sigma construction, law suites and SVG
// rendering. Exit codes: 0 success / property holds, 1 property fails,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "braidcat/equiv.hpp"
#include "braidcat/laws.hpp"
#include "braidcat/render.hpp"

using namespace braidcat;

namespace {

struct CategoryChoice {
  std::string spec = "free";

  std::variant<FreeCat, PermCat, BicharCat> make() const {
    if (spec == "free") return FreeCat();
    if (spec == "perm") return PermCat();
    if (spec.rfind("bichar:", 0) == 0) {
      int n = 0;
      try {
        n = std::stoi(spec.substr(7));
      } catch (...) {
        throw CLI::ValidationError("--category", "bad bichar modulus in '" + spec + "'");
      }
      return BicharCat(n);
    }
    throw CLI::ValidationError("--category",
                               "expected free, perm or bichar:<n>, got '" + spec + "'");
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << bytes;
}

// Parse comma-separated label words, e.g. "1,1" or "a,(b * c)".
std::vector<Word> parse_label_list(const std::string& text) {
  std::vector<Word> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') depth++;
    if (c == ')') depth--;
    if (c == ',' && depth == 0) {
      out.push_back(parse_word(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(parse_word(cur));
  return out;
}

int run_eh(const CategoryChoice& cat_choice, const std::string& labels_text) {
  std::vector<Word> labels = parse_label_list(labels_text);
  if (labels.size() != 2)
    throw std::invalid_argument("sigma eh expects exactly two labels, e.g. --labels a,b");
  return std::visit(
      [&](const auto& cat) {
        auto m = eh_braiding(cat, W_obj(labels[0]), W_obj(labels[1]));
        std::cout << sigma_mor_to_string(cat, m);
        return 0;
      },
      cat_choice.make());
}

int run_interchange(const CategoryChoice& cat_choice, std::uint64_t seed, int cases) {
  return std::visit(
      [&](const auto& cat) {
        using C = std::decay_t<decltype(cat)>;
        UCat<C> u(cat);
        Rng rng(seed);
        int failures = 0;
        for (int k = 0; k < cases; ++k) {
          auto f = u.random_morphism(rng);
          auto g = u.random_morphism(rng);
          auto h = u.random_morphism(rng);
          auto j = u.random_morphism(rng);
          if (!interchange_holds(cat, f, g, h, j)) failures++;
        }
        std::cout << "interchange: " << (cases - failures) << "/" << cases << " cases pass\n";
        return failures == 0 ? 0 : 1;
      },
      cat_choice.make());
}

int run_laws(const CategoryChoice& cat_choice, std::uint64_t seed, int cases,
             const std::string& format) {
  return std::visit(
      [&](const auto& cat) {
        auto reports = run_bmc_laws(cat, seed, cases);
        auto sigma_reports = check_two_monoidal(cat, seed, cases);
        reports.insert(reports.end(), sigma_reports.begin(), sigma_reports.end());
        std::cout << (format == "json" ? law_report_json(reports) : law_report_text(reports));
        for (const LawReport& r : reports)
          if (!r.pass()) return 1;
        return 0;
      },
      cat_choice.make());
}

int run_fo_eval(const std::string& src_text, const std::string& tgt_text,
                const std::string& braid_text) {
  FreeCat cat;
  Word src = parse_word(src_text);
  Word tgt = parse_word(tgt_text);
  BraidWord braid = parse_braid(braid_text);
  LabelledBraid<Word> lb;
  lb.braid = braid;
  for (Label l : flatten(src)) lb.source_labels.push_back(Word::leaf(l));
  Permutation p = underlying_permutation(braid);
  lb.target_labels.assign(lb.source_labels.size(), Word::unit());
  for (int i = 1; i <= braid.strands(); ++i)
    lb.target_labels[p.apply(i) - 1] = lb.source_labels[i - 1];
  lb.check();
  auto m = eval_braid(cat, src, tgt, lb);
  std::cout << cat.mor_to_string(m) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidcat: braided monoidal categories from labelled configurations"};
  app.require_subcommand(1);

  CategoryChoice cat_choice;
  std::uint64_t seed = 1;
  int cases = 100;
  std::string format = "text";

  // braid ----------------------------------------------------------------
  auto* braid_cmd = app.add_subcommand("braid", "braid word tools");
  braid_cmd->require_subcommand(1);

  std::string braid_a, braid_b;
  auto* braid_norm = braid_cmd->add_subcommand("normalize", "print the Garside normal form");
  braid_norm->add_option("word", braid_a, "braid word, e.g. \"n=3 s1 s2 s1^-1\"")->required();

  auto* braid_eq = braid_cmd->add_subcommand("eq", "decide equality of two braid words");
  braid_eq->add_option("left", braid_a)->required();
  braid_eq->add_option("right", braid_b)->required();

  // config ---------------------------------------------------------------
  auto* config_cmd = app.add_subcommand("config", "labelled configuration tools");
  config_cmd->require_subcommand(1);

  std::string cfg_a, cfg_b, stack_mode = "v";
  auto* config_canon = config_cmd->add_subcommand("canon", "print the slide key");
  config_canon->add_option("file", cfg_a, "configuration JSON file")->required();

  auto* config_eq = config_cmd->add_subcommand("eq", "decide slide-equivalence");
  config_eq->add_option("left", cfg_a)->required();
  config_eq->add_option("right", cfg_b)->required();

  auto* config_stack = config_cmd->add_subcommand("stack", "stack two configurations");
  config_stack->add_option("left", cfg_a)->required();
  config_stack->add_option("right", cfg_b)->required();
  config_stack->add_option("--mode", stack_mode, "v (vertical) or h (horizontal)")
      ->check(CLI::IsMember({"v", "h"}));

  // fo -------------------------------------------------------------------
  auto* fo_cmd = app.add_subcommand("fo", "free braided monoidal category");
  fo_cmd->require_subcommand(1);
  std::string fo_src, fo_tgt, fo_braid;
  auto* fo_eval = fo_cmd->add_subcommand("eval", "evaluate a labelled braid");
  fo_eval->add_option("src", fo_src, "source word")->required();
  fo_eval->add_option("tgt", fo_tgt, "target word")->required();
  fo_eval->add_option("braid", fo_braid, "braid word on the leaves")->required();

  // sigma ----------------------------------------------------------------
  auto* sigma_cmd = app.add_subcommand("sigma", "the Sigma construction");
  sigma_cmd->require_subcommand(1);
  std::string eh_labels;
  auto* sigma_eh = sigma_cmd->add_subcommand("eh", "Eckmann-Hilton braiding of two objects");
  sigma_eh->add_option("--labels", eh_labels, "two comma-separated labels")->required();
  sigma_eh->add_option("--category", cat_choice.spec, "free|perm|bichar:<n>");

  auto* sigma_inter = sigma_cmd->add_subcommand("interchange", "random interchange checks");
  sigma_inter->add_option("--category", cat_choice.spec);
  sigma_inter->add_option("--seed", seed);
  sigma_inter->add_option("--cases", cases);

  auto* sigma_laws = sigma_cmd->add_subcommand("laws", "run the law suites");
  sigma_laws->add_option("--category", cat_choice.spec);
  sigma_laws->add_option("--seed", seed);
  sigma_laws->add_option("--cases", cases);
  sigma_laws->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // render ---------------------------------------------------------------
  auto* render_cmd = app.add_subcommand("render", "deterministic SVG output");
  render_cmd->require_subcommand(1);
  std::string render_input, render_out;
  auto* render_braid = render_cmd->add_subcommand("braid", "render a braid word");
  render_braid->add_option("word", render_input)->required();
  render_braid->add_option("-o,--output", render_out);
  auto* render_config = render_cmd->add_subcommand("config", "render a configuration");
  render_config->add_option("file", render_input)->required();
  render_config->add_option("-o,--output", render_out);
  auto* render_lin = render_cmd->add_subcommand("linearisation",
                                                "render a configuration with its linearisation");
  render_lin->add_option("file", render_input)->required();
  render_lin->add_option("-o,--output", render_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (braid_norm->parsed()) {
      BraidWord w = parse_braid(braid_a);
      std::cout << print_braid(word_of_nf(garside_nf(w))) << "\n";
      return 0;
    }
    if (braid_eq->parsed()) {
      BraidWord u = parse_braid(braid_a);
      BraidWord v = parse_braid(braid_b);
      if (u.strands() != v.strands()) {
        std::cerr << "error: strand counts differ\n";
        return 2;
      }
      bool eq = braid_equal(u, v);
      std::cout << (eq ? "equal" : "not equal") << "\n";
      return eq ? 0 : 1;
    }
    if (config_canon->parsed()) {
      Configuration c = config_from_json(read_file(cfg_a));
      std::cout << slide_key_to_string(slide_key(c)) << "\n";
      std::cout << "word: " << print_word(canonical_rep(c).word) << "\n";
      return 0;
    }
    if (config_eq->parsed()) {
      Configuration a = config_from_json(read_file(cfg_a));
      Configuration b = config_from_json(read_file(cfg_b));
      bool eq = slide_equal(a, b);
      std::cout << (eq ? "slide-equivalent" : "not slide-equivalent") << "\n";
      return eq ? 0 : 1;
    }
    if (config_stack->parsed()) {
      Configuration a = config_from_json(read_file(cfg_a));
      Configuration b = config_from_json(read_file(cfg_b));
      Configuration out = stack_mode == "v" ? vstack(a, b) : hstack(a, b);
      std::cout << config_to_json(out) << "\n";
      return 0;
    }
    if (fo_eval->parsed()) return run_fo_eval(fo_src, fo_tgt, fo_braid);
    if (sigma_eh->parsed()) return run_eh(cat_choice, eh_labels);
    if (sigma_inter->parsed()) return run_interchange(cat_choice, seed, cases);
    if (sigma_laws->parsed()) return run_laws(cat_choice, seed, cases, format);
    if (render_braid->parsed()) {
      write_output(render_out, render_braid_svg(parse_braid(render_input)));
      return 0;
    }
    if (render_config->parsed()) {
      write_output(render_out, render_config_svg(config_from_json(read_file(render_input))));
      return 0;
    }
    if (render_lin->parsed()) {
      write_output(render_out,
                   render_linearisation_svg(config_from_json(read_file(render_input))));
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand handled\n";
  return 2;
}
