#include "alcove_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcove/annex.hpp"
#include "alcove/bruhat.hpp"
#include "alcove/galleries.hpp"
#include "alcove/render.hpp"
#include "alcove/verify.hpp"

namespace alcove::cli {

namespace {

using json = nlohmann::ordered_json;

std::string text_word(const GroupContext& ctx, const Element& x) {
  const std::string s = to_word_string(ctx, x);
  return s.empty() ? "e" : s;
}

json word_list(const GroupContext& ctx, const ElementSet& s) {
  json arr = json::array();
  for (const auto& x : sorted_canonically(ctx, s)) arr.push_back(to_word_string(ctx, x));
  return arr;
}

void print_set(const GroupContext& ctx, const ElementSet& s, std::ostream& out) {
  for (const auto& x : sorted_canonically(ctx, s)) out << text_word(ctx, x) << "\n";
}

void write_svg(const std::string& path, const std::string& svg, std::ostream& out) {
  if (path == "-") {
    out << svg;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << svg)) throw Error("cannot write '" + path + "'");
}

Hyperplane parse_wall(const GroupContext& ctx, const std::string& text) {
  std::istringstream in(text);
  Int a = 0, b = 0, k = 0;
  char c1 = 0, c2 = 0;
  if (!(in >> a >> c1 >> b >> c2 >> k) || c1 != ',' || c2 != ',' || !in.eof()) {
    throw PreconditionError("malformed wall '" + text + "': expected a,b,k");
  }
  const Root gamma{{a, b}};
  if (!ctx.roots().is_root(gamma)) throw PreconditionError("wall '" + text + "': " + to_string(gamma) + " is not a root");
  return make_hyperplane(ctx.roots(), gamma, k);
}

json report_json(const GroupContext& ctx, const std::string& name, int max_len, const Report& r) {
  json j{{"name", name}, {"type", std::string(ctx.tag())}, {"max_len", max_len}};
  json st = json::array();
  for (const auto& s : r.statements()) {
    auto failures = s.failures;
    std::sort(failures.begin(), failures.end());
    st.push_back(json{{"statement", s.name},
                      {"instances", s.instances},
                      {"passed", s.passed},
                      {"skipped", s.skipped},
                      {"failures", failures},
                      {"notes", s.notes}});
  }
  j["statements"] = st;
  j["ok"] = r.ok();
  return j;
}

void report_text(const GroupContext& ctx, const std::string& name, int max_len, const Report& r,
                 std::ostream& out) {
  out << name << " " << ctx.tag() << " max-len " << max_len << "\n";
  for (const auto& s : r.statements()) {
    out << "  " << s.name << ": instances " << s.instances << ", passed " << s.passed << ", skipped "
        << s.skipped << ", failures " << s.failures.size() << "\n";
    auto failures = s.failures;
    std::sort(failures.begin(), failures.end());
    for (const auto& f : failures) out << "    FAIL " << f << "\n";
    for (const auto& n : s.notes) out << "    note " << n << "\n";
  }
  out << (r.ok() ? "ok" : "FAILED") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bruhat order, annexes and galleries in the rank-2 affine Weyl groups", "alcove"};
  app.require_subcommand(1);
  app.fallthrough();

  const char* env_type = std::getenv(kTypeEnv);
  std::string type = env_type && *env_type ? env_type : "A2~";
  bool as_json = false;
  app.add_option("-t,--type", type, "A2~, C2~, G2~ or A1~ (default from $ALCOVE_TYPE)")->capture_default_str();
  app.add_flag("--json", as_json, "JSON output");

  std::string word, word2, svg_path;
  std::optional<int> cap;

  auto* reduce = app.add_subcommand("reduce", "Canonical reduced word");
  bool all_words = false;
  reduce->add_option("word", word)->required();
  reduce->add_flag("--all", all_words, "Every reduced word");

  auto* length_cmd = app.add_subcommand("length", "Coxeter length");
  length_cmd->add_option("word", word)->required();

  auto* descents = app.add_subcommand("descents", "Right descent set");
  bool left = false;
  descents->add_option("word", word)->required();
  descents->add_flag("--left", left, "Left descent set instead");

  auto* leq_cmd = app.add_subcommand("leq", "Bruhat comparison x <= y");
  bool use_oracle = false;
  leq_cmd->add_option("x", word)->required();
  leq_cmd->add_option("y", word2)->required();
  leq_cmd->add_flag("--oracle", use_oracle, "Decide by subword search");

  auto* shadow_cmd = app.add_subcommand("shadow", "Lower Bruhat interval [e, w]");
  std::string via = "bruhat";
  shadow_cmd->add_option("word", word)->required();
  shadow_cmd->add_option("--via", via, "bruhat or galleries")
      ->check(CLI::IsMember({"bruhat", "galleries"}))
      ->capture_default_str();
  shadow_cmd->add_option("--cap", cap, "Gallery length cap for --via galleries");
  shadow_cmd->add_option("--svg", svg_path, "Write a picture ('-' for stdout)");

  auto* interval_cmd = app.add_subcommand("interval", "Bruhat interval [x, y]");
  interval_cmd->add_option("x", word)->required();
  interval_cmd->add_option("y", word2)->required();

  auto* annex_cmd = app.add_subcommand("annex", "Annex of w with its boundary panels");
  bool labels = false;
  annex_cmd->add_option("word", word)->required();
  annex_cmd->add_option("--cap", cap, "Member length cap");
  annex_cmd->add_option("--svg", svg_path, "Write a picture ('-' for stdout)");
  annex_cmd->add_flag("--labels", labels, "Label members in the picture");

  auto* boundary_cmd = app.add_subcommand("boundary", "Boundary panels of the annex of w");
  boundary_cmd->add_option("word", word)->required();
  boundary_cmd->add_option("--cap", cap, "Member length cap");

  auto* predict_cmd = app.add_subcommand("predict", "Boundary alcoves produced by parallel reflections");
  int generator = 0, max_n = 6;
  predict_cmd->add_option("word", word)->required();
  predict_cmd->add_option("i", generator, "A right descent of w")->required();
  predict_cmd->add_option("--max-n", max_n, "Longest reflection sequence")->capture_default_str();

  auto* gallery_cmd = app.add_subcommand("gallery", "Alcoves of a (folded) gallery such as 01~20");
  std::string start_word;
  gallery_cmd->add_option("gallery", word)->required();
  gallery_cmd->add_option("--start", start_word, "Start alcove (default e)");
  gallery_cmd->add_option("--svg", svg_path, "Write a picture ('-' for stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification sweep");
  std::string sweep;
  int max_len = 6;
  verify_cmd->add_option("name", sweep)->required()->check(CLI::IsMember(verification_names()));
  verify_cmd->add_option("--max-len", max_len, "Longest element enumerated")->capture_default_str();
  verify_cmd->add_option("--max-n", max_n, "Longest reflection sequence")->capture_default_str();

  auto* render_cmd = app.add_subcommand("render", "SVG scene");
  int radius = 6;
  std::vector<std::string> fills, walls;
  std::string annex_word, shadow_word, gallery_text;
  std::string output = "-";
  render_cmd->add_option("--radius", radius, "Background alcoves of length <= radius")->capture_default_str();
  render_cmd->add_option("--fill", fills, "Words to shade");
  render_cmd->add_option("--annex", annex_word, "Shade an annex and its boundary");
  render_cmd->add_option("--shadow", shadow_word, "Shade a shadow");
  render_cmd->add_option("--wall", walls, "Hyperplane a,b,k in simple-root coordinates");
  render_cmd->add_option("--gallery", gallery_text, "Gallery from e, e.g. 01~20");
  render_cmd->add_flag("--labels", labels, "Label shaded alcoves");
  render_cmd->add_option("-o,--output", output, "Output path ('-' for stdout)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const GroupContext ctx(type);
    auto element = [&](const std::string& w) { return from_word(ctx, parse_word(ctx, w)); };

    if (reduce->parsed()) {
      const Element x = element(word);
      if (all_words) {
        std::vector<std::string> words;
        for (const auto& r : reduced_words(ctx, x)) words.push_back(format_word(r));
        if (as_json) {
          out << json(words).dump() << "\n";
        } else {
          for (const auto& w : words) out << (w.empty() ? "e" : w) << "\n";
        }
      } else if (as_json) {
        out << json{{"type", std::string(ctx.tag())}, {"word", to_word_string(ctx, x)}}.dump() << "\n";
      } else {
        out << text_word(ctx, x) << "\n";
      }
    } else if (length_cmd->parsed()) {
      const Element x = element(word);
      if (as_json) {
        out << json{{"type", std::string(ctx.tag())}, {"word", to_word_string(ctx, x)}, {"length", length(ctx, x)}}
                   .dump()
            << "\n";
      } else {
        out << length(ctx, x) << "\n";
      }
    } else if (descents->parsed()) {
      const Element x = element(word);
      const GeneratorSet d = left ? left_descents(ctx, x) : right_descents(ctx, x);
      if (as_json) {
        out << json(d.members()).dump() << "\n";
      } else {
        out << to_string(d) << "\n";
      }
    } else if (leq_cmd->parsed()) {
      const Element x = element(word), y = element(word2);
      const bool r = use_oracle ? leq_oracle(ctx, x, y) : leq(ctx, x, y);
      if (as_json) {
        out << json{{"x", to_word_string(ctx, x)}, {"y", to_word_string(ctx, y)}, {"leq", r}}.dump() << "\n";
      } else {
        out << (r ? "true" : "false") << "\n";
      }
    } else if (shadow_cmd->parsed()) {
      const Element w = element(word);
      const ElementSet s = via == "galleries" ? shadow_via_foldings(ctx, w, cap.value_or(12)) : shadow(ctx, w);
      if (!svg_path.empty()) {
        Scene scene = set_scene(ctx, s);
        scene.layers.push_back(GalleryLayer{gallery_from_word(ctx.identity(), reduced_word(ctx, w))});
        write_svg(svg_path, render_svg(ctx, scene), out);
        if (svg_path == "-") return 0;
      }
      if (as_json) {
        out << word_list(ctx, s).dump() << "\n";
      } else {
        print_set(ctx, s, out);
      }
    } else if (interval_cmd->parsed()) {
      const BruhatInterval iv = interval(ctx, element(word), element(word2));
      if (as_json) {
        out << word_list(ctx, iv.members).dump() << "\n";
      } else {
        print_set(ctx, iv.members, out);
      }
    } else if (annex_cmd->parsed() || boundary_cmd->parsed()) {
      const Annex a = annex(ctx, element(word), cap);
      json panels = json::array();
      for (const auto& p : a.boundary) panels.push_back(json::array({to_word_string(ctx, p.alcove), p.type}));
      if (boundary_cmd->parsed()) {
        if (as_json) {
          out << panels.dump() << "\n";
        } else {
          for (const auto& p : a.boundary) out << text_word(ctx, p.alcove) << " " << p.type << "\n";
        }
        return 0;
      }
      if (!svg_path.empty()) {
        Scene scene = annex_scene(ctx, a);
        scene.labels = labels;
        write_svg(svg_path, render_svg(ctx, scene), out);
        if (svg_path == "-") return 0;
      }
      if (as_json) {
        out << json{{"owner", to_word_string(ctx, a.owner)}, {"members", word_list(ctx, a.members)}, {"boundary", panels}}
                   .dump()
            << "\n";
      } else {
        out << "owner " << text_word(ctx, a.owner) << "\n"
            << "members " << a.members.size() << "\n";
        print_set(ctx, a.members, out);
        out << "boundary " << a.boundary.size() << "\n";
        for (const auto& p : a.boundary) out << text_word(ctx, p.alcove) << " " << p.type << "\n";
      }
    } else if (predict_cmd->parsed()) {
      const Element w = element(word);
      const auto preds = predictions(ctx, w, generator, max_n);
      if (as_json) {
        json arr = json::array();
        for (const auto& p : preds) {
          arr.push_back(json{{"word", to_word_string(ctx, p.element)},
                             {"direction", p.seq.direction.coords},
                             {"first_level", p.seq.first_level},
                             {"step", p.seq.step},
                             {"n", p.seq.count}});
        }
        out << json{{"owner", to_word_string(ctx, w)}, {"i", generator}, {"predictions", arr}}.dump() << "\n";
      } else {
        for (const auto& p : preds) {
          out << text_word(ctx, p.element) << " " << to_string(p.seq.wall(1)) << " step "
              << (p.seq.step > 0 ? "+1" : "-1") << " n " << p.seq.count << "\n";
        }
      }
    } else if (gallery_cmd->parsed()) {
      const Gallery g = parse_gallery(ctx, word, element(start_word));
      const auto cells = alcove_sequence(ctx, g);
      if (!svg_path.empty()) {
        write_svg(svg_path, render_svg(ctx, gallery_scene(ctx, g)), out);
        if (svg_path == "-") return 0;
      }
      if (as_json) {
        json arr = json::array();
        for (const auto& c : cells) arr.push_back(to_word_string(ctx, c));
        out << json{{"gallery", format_gallery(g)}, {"alcoves", arr}, {"end", to_word_string(ctx, cells.back())}}
                   .dump()
            << "\n";
      } else {
        for (const auto& c : cells) out << text_word(ctx, c) << "\n";
      }
    } else if (verify_cmd->parsed()) {
      const Report r = run_verification(ctx, sweep, max_len, max_n);
      if (as_json) {
        out << report_json(ctx, sweep, max_len, r).dump(2) << "\n";
      } else {
        report_text(ctx, sweep, max_len, r, out);
      }
      return r.ok() ? 0 : 2;
    } else if (render_cmd->parsed()) {
      Scene scene;
      scene.radius = radius;
      scene.labels = labels;
      if (!shadow_word.empty()) {
        scene.layers.push_back(FillLayer{sorted_canonically(ctx, shadow(ctx, element(shadow_word))), "#cfcfcf"});
      }
      if (!annex_word.empty()) {
        const Scene a = annex_scene(ctx, annex(ctx, element(annex_word)));
        scene.layers.insert(scene.layers.end(), a.layers.begin(), a.layers.end());
      }
      if (!fills.empty()) {
        FillLayer f;
        f.color = "#9fd3a8";
        for (const auto& w : fills) f.alcoves.push_back(element(w));
        scene.layers.push_back(f);
      }
      for (const auto& w : walls) scene.layers.push_back(HyperplaneLayer{parse_wall(ctx, w)});
      if (!gallery_text.empty()) scene.layers.push_back(GalleryLayer{parse_gallery(ctx, gallery_text, ctx.identity())});
      write_svg(output, render_svg(ctx, scene), out);
    }
  } catch (const Error& e) {
    err << "alcove: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace alcove::cli
