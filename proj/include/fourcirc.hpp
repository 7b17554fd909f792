/*
   Copyright 2026 The fourcirc Authors

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

#ifndef FOURCIRC_HPP
#define FOURCIRC_HPP

#include "fourcirc/asympt.hpp"
#include "fourcirc/bigint.hpp"
#include "fourcirc/census.hpp"
#include "fourcirc/crt.hpp"
#include "fourcirc/errors.hpp"
#include "fourcirc/factorization.hpp"
#include "fourcirc/four_circulant.hpp"
#include "fourcirc/galois.hpp"
#include "fourcirc/matrix.hpp"
#include "fourcirc/numtheory.hpp"
#include "fourcirc/parallel.hpp"
#include "fourcirc/polyring.hpp"

#endif
