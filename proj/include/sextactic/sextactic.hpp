/*
   Copyright 2026 The sextactic authors

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

#pragma once

#include "sextactic/binary_form.hpp"
#include "sextactic/branch.hpp"
#include "sextactic/census.hpp"
#include "sextactic/differential.hpp"
#include "sextactic/errors.hpp"
#include "sextactic/matrix.hpp"
#include "sextactic/parser.hpp"
#include "sextactic/point.hpp"
#include "sextactic/poly.hpp"
#include "sextactic/rat.hpp"
#include "sextactic/rational.hpp"
#include "sextactic/series.hpp"
