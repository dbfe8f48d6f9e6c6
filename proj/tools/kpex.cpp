// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

int main() { return 0; }  // placeholder while the library comes up
