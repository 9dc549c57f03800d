#!/usr/bin/env node
import process from "node:process";

import { main } from "./cli.js";

process.exit(main(process.argv.slice(2)));
