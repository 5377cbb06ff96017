#ifndef ARTINQP_PRESENTATION_HPP
#define ARTINQP_PRESENTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "artinqp/graph.hpp"
#include "artinqp/word.hpp"

namespace artinqp {

// Provenance of a relator; drives the block layout of the Alexander matrix.
enum class RelatorTag {
  ArtinA,     // classical Artin relation of an Artin presentation
  CocyclicA,  // A-type relation of a standard co-cyclic presentation
  CocyclicB,  // B-type (bracket) relation
  Other,
};

// A-subtypes of the standard co-cyclic presentation.
enum class CocyclicASub { None, R1_VU, R2_VV, R3_VW, R4_WW };

struct Relator {
  Word lhs, rhs;  // the relation lhs = rhs; stored relator word is lhs*rhs^-1
  RelatorTag tag = RelatorTag::Other;
  CocyclicASub sub = CocyclicASub::None;
  int coset = -1;           // j for R3/R4 rows, i for B rows
  std::string edge_a, edge_b;  // originating edge (vertex names)

  Word word() const { return lhs * rhs.inverse(); }
};

struct Presentation {
  std::vector<std::string> generators;  // ordered; fixes matrix column order
  std::vector<Relator> relators;

  int generator_index(const std::string& g) const;
  bool has_generator(const std::string& g) const;
};

// Generator naming for co-cyclic presentations: the coset copies of w are
// "w.0", "w.1", ...; u^k is "<u>~".
std::string coset_gen(const std::string& v, int j);
std::string ubar_gen(const std::string& u);

// (uv)^ell (vu)^-ell, freely reduced.
Word artin_relator(const std::string& u, const std::string& v, int ell);

// One generator per vertex, one relator per edge with ell = label/2;
// non-adjacent vertices contribute nothing.
Presentation artin_presentation(const LabeledGraph& g);

// The cyclic word <x,y>_{i,eps}^l over the period-(k+1) alphabet
// (x_0,...,x_{k-1}, y): the c(k+1)+r+eps consecutive letters starting at
// slot i, where l = c k + r and slot k is y. Generators are named via
// coset_gen(x,*) and the literal name y.
Word bracket_word(const std::string& x, const std::string& y, int k, int i,
                  int eps, int l);

// Standard presentation of the co-cyclic subgroup at (u, k): generators
// {ubar} + V_{2,u} + {w.j}, relations R1-R4 and B^i per edge at u.
Presentation cocyclic_presentation(const LabeledGraph& g, const std::string& u, int k);

// Unsimplified Reidemeister-Schreier presentation from the section s(i)=u^i:
// one copy v.j per vertex per coset, relators obtained by honest coset
// rewriting of the Artin relators. Independent oracle for
// cocyclic_presentation.
Presentation rs_presentation_generic(const LabeledGraph& g, const std::string& u, int k);

// Torsion-free abelianization: one variable per class of identified
// generators. Throws if the relator exponent lattice has torsion.
struct Abelianization {
  std::vector<std::string> generators;  // presentation generator order
  std::vector<int> var_of_gen;          // generator index -> variable index
  std::vector<std::string> var_names;   // representative generator per variable

  int rank() const { return static_cast<int>(var_names.size()); }
  int var(const std::string& gen) const;
};

Abelianization abelianize(const Presentation& p);

}  // namespace artinqp

#endif
