#ifndef DIHO_IO_HPP
#define DIHO_IO_HPP

#include <iosfwd>
#include <string>

#include "diho/digraph.hpp"
#include "diho/homotopy.hpp"
#include "diho/limits.hpp"
#include "diho/map.hpp"

namespace diho {

/*
 * Digraph text format, one item per line:
 *   # comment
 *   v <label>
 *   e <from> <to>     (endpoints declared implicitly)
 */
Digraph parse_digraph(std::istream& in, const std::string& what = "digraph");
Digraph parse_digraph_text(const std::string& text);
Digraph load_digraph(const std::string& path);
std::string format_digraph(const Digraph& g);
void save_digraph(const Digraph& g, const std::string& path);

/*
 * Map text format:
 *   domain <path>        (relative to the map file)
 *   codomain <path>
 *   m <vertex> <image>   (one line per domain vertex)
 */
DigraphMap load_map(const std::string& path);
std::string format_map(const DigraphMap& m, const std::string& domain_ref,
                       const std::string& codomain_ref);
/* Assignment lines only; used when domain/codomain travel separately. */
std::string format_assignment(const DigraphMap& m);

/*
 * Track format (.hty), self-contained sections:
 *   word <signs>        (bare `word` for a zero-length track)
 *   domain              (followed by v/e lines)
 *   codomain            (followed by v/e lines)
 *   map                 (followed by m lines; one section per stop, in order)
 */
Homotopy parse_track_text(const std::string& text, const std::string& what = "track");
Homotopy load_track(const std::string& path);
std::string format_track(const Homotopy& t);
void save_track(const Homotopy& t, const std::string& path);

/*
 * Extension-problem format (.hep), self-contained sections:
 *   graph / sub / target   (v/e lines each)
 *   start-map              (m lines; a map graph -> target)
 *   step <+|->             (m lines; next stop of the track on sub, repeatable)
 */
HepInstance parse_hep_text(const std::string& text, const std::string& what = "instance");
HepInstance load_hep(const std::string& path);
std::string format_hep(const HepInstance& inst);

/*
 * Finite system format (.fs):
 *   obj <name> : tok1 tok2 ...
 *   mor <src> -> <dst> : tok=tok, tok=tok, ...
 * Identities are implicit; composites must be listed (build closure rule).
 */
limits::FiniteSystem parse_system_text(const std::string& text,
                                       const std::string& what = "system");
limits::FiniteSystem load_system(const std::string& path);
std::string format_system(const limits::FiniteSystem& s);

/* Graphviz rendering; construction tags pick the node shape. Byte-stable. */
std::string export_dot(const Digraph& g, const std::string& name = "G");

}  // namespace diho

#endif
