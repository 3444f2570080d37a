#pragma once

#include <map>
#include <string>

#include "amou/morphism.hpp"

namespace amou {

// Text workspace: named algebras, elements, morphisms.
//
//   algebra A blocks = [1,2]
//   element p in A level (1,1) block 1 = [[1+0i]] block 2 = [[...],[...]]
//   morphism f : A -> B mult = [[2]] conj 1 = [[...]]
//
// Whitespace (including newlines) is free inside and between records; '#'
// starts a comment. Complex literals are a+bi / a-bi with decimal floats;
// values written by print_workspace round-trip bit-exactly.
struct WorkspaceElement {
    std::string algebra_name;
    AElement value;
};

struct WorkspaceMorphism {
    std::string source_name;
    std::string target_name;
    MorphismSpec spec;
};

struct Workspace {
    std::map<std::string, Algebra> algebras;
    std::map<std::string, WorkspaceElement> elements;
    std::map<std::string, WorkspaceMorphism> morphisms;
};

Workspace parse_workspace(const std::string& text); // ParseError / UnknownName
std::string print_workspace(const Workspace& ws);
Workspace load_workspace_file(const std::string& path); // ParseError on unreadable file

std::string format_complex(cplx z); // canonical a+bi with 17 significant digits

} // namespace amou
