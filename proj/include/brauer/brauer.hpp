/*
   Copyright 2026 The brauer-residues Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_BRAUER_HPP
#define BRAUER_BRAUER_HPP

#include "arith.hpp"
#include "cohomology.hpp"
#include "conic.hpp"
#include "error.hpp"
#include "field_tower.hpp"
#include "finite_field.hpp"
#include "kummer.hpp"
#include "linalg.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "symbols.hpp"

#endif // BRAUER_BRAUER_HPP
