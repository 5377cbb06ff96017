#ifndef ARTINQP_IO_HPP
#define ARTINQP_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "artinqp/alexmatrix.hpp"
#include "artinqp/graph.hpp"
#include "artinqp/qpdecide.hpp"
#include "artinqp/torus.hpp"

namespace artinqp {

// Line-oriented graph files: `vertex <name>` and `edge <a> <b> <even label>`
// lines, `#` comments, blank lines ignored.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error(msg + " at line " + std::to_string(line_)), line(line_) {}
};

LabeledGraph parse_graph(std::istream& in);
LabeledGraph parse_graph_file(const std::string& path);
std::string print_graph(const LabeledGraph& g);  // parse/print fixpoint

// Torus files: one constraint per line, tori separated by blank lines.
std::vector<TorsionTorus> parse_torus_file(std::istream& in, int ambient);
std::vector<TorsionTorus> parse_torus_file(const std::string& path, int ambient);

// Presentation pretty-printer: one relator per line as `W1 = W2`, with the
// provenance annotation in front.
std::string print_presentation(const Presentation& p);

// Aligned matrix text with the variable legend; deterministic monomial order.
std::string print_matrix(const AlexMatrix& m);

// FNV-1a over the canonical graph serialization.
std::string graph_hash(const LabeledGraph& g);

// Machine-readable certificate for a decision (JSON).
std::string certificate_json(const LabeledGraph& g, const Verdict& v,
                             const std::optional<ObstructionReport>& rep);

// Re-verifies a NotQP certificate: recomputes the obstruction report from the
// embedded graph + witness and compares all recorded ranks. Returns an empty
// string on success, a diagnostic otherwise.
std::string recheck_certificate(const std::string& json_text);

extern const char* kToolVersion;

}  // namespace artinqp

#endif
