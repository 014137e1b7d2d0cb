#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tgl/tanglegram.hpp"
#include "tgl/tree.hpp"

namespace tgl {

// Parse failure with 1-based source coordinates.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Builds a tree from a nested parenthesization of leaf labels, e.g.
// "((a,b),c)". Every internal node must have exactly two subtrees; labels
// must be distinct and free of whitespace, '(', ')', ',' and ';'. A trailing
// ';' is accepted. Node ids are assigned in completion (post) order.
BinaryTree build_tree(std::string_view spec);

// Tanglegram text format:
//     tgl v1
//     ((a,b),(c,d));
//     ((a,c),(b,d));
// Line 2 is the left tree, line 3 the right tree; the shared label sets
// define the matching. Arbitrary whitespace between tokens is accepted.
Tanglegram parse_tanglegram(std::string_view text);

// Emits the canonical three-line form (LF line endings, no interior
// whitespace). parse_tanglegram(serialize_tanglegram(t)) reproduces t's
// structure, labels and stored child order exactly.
std::string serialize_tanglegram(const Tanglegram& t);

std::string serialize_tree(const BinaryTree& t);

Tanglegram read_tanglegram_file(const std::string& path);

}  // namespace tgl
