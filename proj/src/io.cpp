#include "diho/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "diho/error.hpp"

namespace diho {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line;
  if (auto hash = body.find('#'); hash != std::string::npos) body.resize(hash);
  std::istringstream ss(body);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void bad_line(const std::string& what, int lineno,
                           const std::string& line) {
  throw Error(ErrorCode::ParseError,
              what + " line " + std::to_string(lineno) + ": '" + line + "'");
}

std::string dirname_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  if (slash == std::string::npos) return "";
  return path.substr(0, slash + 1);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return in;
}

}  // namespace

Digraph parse_digraph(std::istream& in, const std::string& what) {
  Digraph::Builder b;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "v" && toks.size() == 2) {
      b.add_vertex(Label::parse(toks[1]));
    } else if (toks[0] == "e" && toks.size() == 3) {
      b.add_edge(Label::parse(toks[1]), Label::parse(toks[2]));
    } else {
      bad_line(what, lineno, line);
    }
  }
  return b.build();
}

Digraph parse_digraph_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_digraph(ss);
}

Digraph load_digraph(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_digraph(in, path);
}

std::string format_digraph(const Digraph& g) {
  std::string out;
  std::vector<bool> touched(static_cast<size_t>(g.vertex_count()), false);
  for (const auto& [a, b] : g.edges())
    touched[static_cast<size_t>(a)] = touched[static_cast<size_t>(b)] = true;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (!touched[static_cast<size_t>(i)])
      out += "v " + g.label_at(i).text() + "\n";
  for (const auto& [a, b] : g.edges())
    out += "e " + g.label_at(a).text() + " " + g.label_at(b).text() + "\n";
  return out;
}

void save_digraph(const Digraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << format_digraph(g);
}

DigraphMap load_map(const std::string& path) {
  auto in = open_or_throw(path);
  std::string dir = dirname_of(path);
  std::string line;
  int lineno = 0;
  DigraphPtr dom, cod;
  std::map<Label, Label> assign;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "domain" && toks.size() == 2) {
      dom = share(load_digraph(dir + toks[1]));
    } else if (toks[0] == "codomain" && toks.size() == 2) {
      cod = share(load_digraph(dir + toks[1]));
    } else if (toks[0] == "m" && toks.size() == 3) {
      assign[Label::parse(toks[1])] = Label::parse(toks[2]);
    } else {
      bad_line(path, lineno, line);
    }
  }
  if (!dom || !cod)
    throw Error(ErrorCode::ParseError, path + ": missing domain or codomain");
  return DigraphMap(std::move(dom), std::move(cod), assign);
}

std::string format_assignment(const DigraphMap& m) {
  std::string out;
  for (int i = 0; i < m.domain().vertex_count(); ++i)
    out += "m " + m.domain().label_at(i).text() + " " +
           m.codomain().label_at(m.apply_index(i)).text() + "\n";
  return out;
}

std::string format_map(const DigraphMap& m, const std::string& domain_ref,
                       const std::string& codomain_ref) {
  return "domain " + domain_ref + "\ncodomain " + codomain_ref + "\n" +
         format_assignment(m);
}

namespace {

/* Shared line-walker for section-based formats.  `on_header` is called for
 * recognized section names; other nonempty lines go to `on_row`. */
void walk_sections(
    const std::string& text, const std::string& what,
    const std::vector<std::string>& headers,
    const std::function<void(const std::vector<std::string>&, int)>& on_header,
    const std::function<void(const std::vector<std::string>&, int)>& on_row) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (std::find(headers.begin(), headers.end(), toks[0]) != headers.end())
      on_header(toks, lineno);
    else
      on_row(toks, lineno);
  }
  (void)what;
}

bool word_is_signs(const std::string& w) {
  for (char c : w)
    if (c != '+' && c != '-') return false;
  return true;
}

}  // namespace

Homotopy parse_track_text(const std::string& text, const std::string& what) {
  std::string word;
  bool have_word = false;
  std::string dom_buf, cod_buf;
  std::vector<std::map<Label, Label>> stops;
  std::string* graph_buf = nullptr;
  std::map<Label, Label>* stop = nullptr;
  walk_sections(
      text, what, {"word", "domain", "codomain", "map"},
      [&](const std::vector<std::string>& toks, int lineno) {
        graph_buf = nullptr;
        stop = nullptr;
        if (toks[0] == "word") {
          word = toks.size() > 1 ? toks[1] : "";
          if (toks.size() > 2 || !word_is_signs(word))
            bad_line(what, lineno, "word " + word);
          have_word = true;
        } else if (toks[0] == "domain") {
          graph_buf = &dom_buf;
        } else if (toks[0] == "codomain") {
          graph_buf = &cod_buf;
        } else {
          stops.emplace_back();
          stop = &stops.back();
        }
      },
      [&](const std::vector<std::string>& toks, int lineno) {
        if (graph_buf && (toks[0] == "v" || toks[0] == "e")) {
          for (const auto& t : toks) *graph_buf += t + " ";
          *graph_buf += "\n";
        } else if (stop && toks[0] == "m" && toks.size() == 3) {
          (*stop)[Label::parse(toks[1])] = Label::parse(toks[2]);
        } else {
          bad_line(what, lineno, toks[0] + " ...");
        }
      });
  if (!have_word) throw Error(ErrorCode::ParseError, what + ": missing word line");
  if (stops.size() != word.size() + 1)
    throw Error(ErrorCode::ParseError,
                what + ": " + std::to_string(stops.size()) + " stops for a " +
                    std::to_string(word.size()) + "-letter word");
  DigraphPtr dom = share(parse_digraph_text(dom_buf));
  DigraphPtr cod = share(parse_digraph_text(cod_buf));
  std::vector<DigraphMap> maps;
  maps.reserve(stops.size());
  for (const auto& s : stops) maps.emplace_back(dom, cod, s);
  return Homotopy{word, std::move(maps)};
}

Homotopy load_track(const std::string& path) {
  auto in = open_or_throw(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_track_text(buf.str(), path);
}

std::string format_track(const Homotopy& t) {
  std::string out = "word";
  if (!t.word.empty()) out += " " + t.word;
  out += "\ndomain\n" + format_digraph(t.front().domain());
  out += "codomain\n" + format_digraph(t.front().codomain());
  for (const DigraphMap& m : t.maps) out += "map\n" + format_assignment(m);
  return out;
}

void save_track(const Homotopy& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << format_track(t);
}

HepInstance parse_hep_text(const std::string& text, const std::string& what) {
  std::string g_buf, x_buf, h_buf;
  std::map<Label, Label> start;
  bool have_start = false;
  std::string word;
  std::vector<std::map<Label, Label>> steps;
  std::string* graph_buf = nullptr;
  std::map<Label, Label>* assign = nullptr;
  walk_sections(
      text, what, {"graph", "sub", "target", "start-map", "step"},
      [&](const std::vector<std::string>& toks, int lineno) {
        graph_buf = nullptr;
        assign = nullptr;
        if (toks[0] == "graph") {
          graph_buf = &g_buf;
        } else if (toks[0] == "sub") {
          graph_buf = &x_buf;
        } else if (toks[0] == "target") {
          graph_buf = &h_buf;
        } else if (toks[0] == "start-map") {
          have_start = true;
          assign = &start;
        } else {
          if (toks.size() != 2 || !word_is_signs(toks[1]) || toks[1].size() != 1)
            bad_line(what, lineno, "step needs a single +/- sign");
          word += toks[1];
          steps.emplace_back();
          assign = &steps.back();
        }
      },
      [&](const std::vector<std::string>& toks, int lineno) {
        if (graph_buf && (toks[0] == "v" || toks[0] == "e")) {
          for (const auto& t : toks) *graph_buf += t + " ";
          *graph_buf += "\n";
        } else if (assign && toks[0] == "m" && toks.size() == 3) {
          (*assign)[Label::parse(toks[1])] = Label::parse(toks[2]);
        } else {
          bad_line(what, lineno, toks[0] + " ...");
        }
      });
  if (!have_start)
    throw Error(ErrorCode::ParseError, what + ": missing start-map section");
  DigraphPtr gp = share(parse_digraph_text(g_buf));
  DigraphPtr xp = share(parse_digraph_text(x_buf));
  DigraphPtr hp = share(parse_digraph_text(h_buf));
  DigraphMap f0(gp, hp, start);
  std::vector<DigraphMap> maps;
  maps.push_back(restrict_map(f0, xp));
  for (const auto& s : steps) maps.emplace_back(xp, hp, s);
  return HepInstance(gp, xp, std::move(f0), Homotopy{word, std::move(maps)});
}

HepInstance load_hep(const std::string& path) {
  auto in = open_or_throw(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hep_text(buf.str(), path);
}

std::string format_hep(const HepInstance& inst) {
  std::string out = "graph\n" + format_digraph(*inst.whole);
  out += "sub\n" + format_digraph(*inst.part);
  out += "target\n" + format_digraph(inst.start.codomain());
  out += "start-map\n" + format_assignment(inst.start);
  for (size_t k = 0; k < inst.track.length(); ++k) {
    out += std::string("step ") + inst.track.word[k] + "\n";
    out += format_assignment(inst.track.maps[k + 1]);
  }
  return out;
}

limits::FiniteSystem parse_system_text(const std::string& text,
                                       const std::string& what) {
  limits::SystemBuilder b;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "obj" && toks.size() >= 3 && toks[2] == ":") {
      b.add_object(toks[1], {toks.begin() + 3, toks.end()});
    } else if (toks[0] == "mor" && toks.size() >= 6 && toks[2] == "->" &&
               toks[4] == ":") {
      std::map<std::string, std::string> fn;
      for (size_t i = 5; i < toks.size(); ++i) {
        std::istringstream pieces(toks[i]);
        std::string piece;
        while (std::getline(pieces, piece, ',')) {
          if (piece.empty()) continue;
          auto eq = piece.find('=');
          if (eq == std::string::npos || eq == 0 || eq + 1 == piece.size())
            bad_line(what, lineno, piece);
          fn[piece.substr(0, eq)] = piece.substr(eq + 1);
        }
      }
      b.add_morphism(toks[1], toks[3], fn);
    } else {
      bad_line(what, lineno, line);
    }
  }
  return b.build();
}

limits::FiniteSystem load_system(const std::string& path) {
  auto in = open_or_throw(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_text(buf.str(), path);
}

std::string format_system(const limits::FiniteSystem& s) {
  std::string out;
  for (int i = 0; i < s.object_count(); ++i) {
    out += "obj " + s.object_name(i) + " :";
    for (const auto& t : s.tokens(i)) out += " " + t;
    out += "\n";
  }
  for (const auto& [key, fn] : s.homs()) {
    auto [x, y] = key;
    if (x == y) continue;
    out += "mor " + s.object_name(x) + " -> " + s.object_name(y) + " :";
    const auto& src = s.tokens(x);
    const auto& dst = s.tokens(y);
    for (size_t t = 0; t < fn.size(); ++t) {
      out += t ? ", " : " ";
      out += src[t] + "=" + dst[static_cast<size_t>(fn[t])];
    }
    out += "\n";
  }
  return out;
}

namespace {

const char* shape_for(Label::Tag t) {
  using Tag = Label::Tag;
  switch (t) {
    case Tag::Leaf: return "ellipse";
    case Tag::Pair: return "oval";
    case Tag::Base: return "box";
    case Tag::Cyl: return "parallelogram";
    case Tag::Mid: return "hexagon";
    case Tag::Src: return "trapezium";
    case Tag::Cone: return "house";
    case Tag::Apex: return "doublecircle";
    case Tag::Star: return "circle";
    case Tag::Class: return "octagon";
  }
  return "ellipse";
}

}  // namespace

std::string export_dot(const Digraph& g, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  for (int i = 0; i < g.vertex_count(); ++i) {
    const Label& v = g.label_at(i);
    out += "  n" + std::to_string(i) + " [label=\"" + v.text() +
           "\", shape=" + shape_for(v.tag()) + "];\n";
  }
  for (const auto& [a, b] : g.edges())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace diho
