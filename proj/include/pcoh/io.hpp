#pragma once

#include <string>
#include <vector>

#include "pcoh/kernel.hpp"
#include "pcoh/morphism.hpp"

namespace pcoh {

// Plain-text formats. Every number prints canonically ("p" or "p/q") and
// parses back to the identical rational, so text round trips are exact.
// Lines are whitespace-separated; labels never contain spaces.

// Polytope: "web: a b c", then one dense row per line, "H: ..." per facet
// and "V: ..." per generator, in stored order. At least one row is required
// (the empty-web space has no serializable rows).
std::string polytope_to_text(const Polytope& p);
Polytope polytope_from_text(const std::string& text);

// PCS: a first line "pcs", then the unit ball in polytope format. Parsing
// revalidates the ball.
std::string pcs_to_text(const Pcs& x);
Pcs pcs_from_text(const std::string& text);

// Vector: a single line "vec: ..." with dense entries.
std::string vec_to_text(const RatVec& v, int dim);
RatVec vec_from_text(const std::string& text);

// Matrix: "matrix dom.pcs cod.pcs" naming the endpoint files, then one line
// "a b p/q" per nonzero entry (a: domain label, b: codomain label),
// row-major. Assembly needs the two spaces, loaded by the caller.
struct MatrixText {
    std::string dom_path;
    std::string cod_path;
    struct Entry {
        std::string row;
        std::string col;
        Rat value;
    };
    std::vector<Entry> entries;
};

std::string matrix_to_text(const MorphMatrix& t, const std::string& dom_path,
                           const std::string& cod_path);
MatrixText matrix_text_parse(const std::string& text);
MorphMatrix matrix_assemble(const MatrixText& mt, const Pcs& dom, const Pcs& cod);

// Kernel: "kernel a,b,c x,y" holding the comma-separated point labels of the
// two spaces, then one line "r y p/q" per nonzero mass.
std::string kernel_to_text(const Kernel& k);
Kernel kernel_from_text(const std::string& text);

// File helpers. Read failures and malformed content raise ParseError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Pcs load_pcs(const std::string& path);
RatVec load_vec(const std::string& path);
Kernel load_kernel(const std::string& path);
// Loads the matrix together with its endpoint spaces; relative endpoint
// paths resolve against the matrix file's own directory.
MorphMatrix load_matrix(const std::string& path);

}  // namespace pcoh
