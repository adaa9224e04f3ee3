# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
