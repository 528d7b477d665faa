// @vitest-environment node
import { execFileSync } from "node:child_process";
import {
  cpSync,
  mkdtempSync,
  readdirSync,
  readFileSync,
  rmSync,
  writeFileSync,
} from "node:fs";
import { tmpdir } from "node:os";
import path from "node:path";
import { fileURLToPath, pathToFileURL } from "node:url";
import { afterAll, describe, expect, it } from "vitest";

const ROOT = fileURLToPath(new URL("..", import.meta.url));

interface KindEntry {
  injection_file: string;
  marker: string;
  build: string[];
  output: string;
}

const descriptor = JSON.parse(readFileSync(path.join(ROOT, "scaffold.json"), "utf8")) as Record<
  "block-host" | "full-app",
  KindEntry
>;

const helloBlock = readFileSync(path.join(ROOT, "fixtures", "hello-block.tsx"), "utf8");
const helloApp = readFileSync(path.join(ROOT, "fixtures", "hello-app.tsx"), "utf8");

const workspaces: string[] = [];
afterAll(() => {
  for (const workspace of workspaces) {
    rmSync(workspace, { recursive: true, force: true });
  }
});

const SKIPPED = new Set(["node_modules", "dist", ".git"]);

// Same copy rules the consumer applies: installed dependencies and
// build products never travel with the template, so the build below
// proves the template is self-sufficient.
function instantiate(kind: "block-host" | "full-app", source: string): string {
  const workspace = mkdtempSync(path.join(tmpdir(), "web-scaffold-"));
  workspaces.push(workspace);
  cpSync(ROOT, workspace, {
    recursive: true,
    filter: (entry) => {
      const base = path.basename(entry);
      return !SKIPPED.has(base) && !base.endsWith(".log");
    },
  });
  const entry = descriptor[kind];
  const target = path.join(workspace, entry.injection_file);
  writeFileSync(target, readFileSync(target, "utf8").replace(entry.marker, source));
  return workspace;
}

function build(workspace: string, kind: "block-host" | "full-app"): void {
  const [command, ...args] = descriptor[kind].build;
  execFileSync(command, args, { cwd: workspace, stdio: "pipe", encoding: "utf8" });
}

function distFiles(workspace: string): string[] {
  return readdirSync(path.join(workspace, "dist")).sort();
}

describe("workspace builds", () => {
  it("builds the hello block into a self-contained page", () => {
    const workspace = instantiate("block-host", helloBlock);
    build(workspace, "block-host");
    const dist = path.join(workspace, "dist");
    const page = readFileSync(path.join(dist, "index.html"), "utf8");
    expect(page).toContain('src="./block-host.js"');
    expect(page).toContain('href="./styles.css"');
    expect(readFileSync(path.join(dist, "candidate.js"), "utf8")).toContain("hello-block");
    expect(distFiles(workspace)).toContain("runtime.js");
  });

  it("emits only relative extensioned imports, nothing left to install", () => {
    const workspace = instantiate("block-host", helloBlock);
    build(workspace, "block-host");
    const dist = path.join(workspace, "dist");
    for (const name of distFiles(workspace)) {
      if (!name.endsWith(".js") || name === "runtime.js") continue;
      const code = readFileSync(path.join(dist, name), "utf8");
      for (const match of code.matchAll(/(?:from|import)\s*["']([^"'\n]+)["']/g)) {
        expect(match[1], `${name} imports ${match[1]}`).toMatch(/^\.\.?\/.*\.js$/);
      }
    }
  });

  it("builds the hello app with the sidebar shell", () => {
    const workspace = instantiate("full-app", helloApp);
    build(workspace, "full-app");
    const dist = path.join(workspace, "dist");
    const page = readFileSync(path.join(dist, "index.html"), "utf8");
    expect(page).toContain('src="./full-app.js"');
    expect(readFileSync(path.join(dist, "app.js"), "utf8")).toContain("hello-app");
    expect(readFileSync(path.join(dist, "shell.js"), "utf8")).toContain("data-module-target");
  });

  it("refuses to build while the sentinel is still in place", () => {
    const workspace = mkdtempSync(path.join(tmpdir(), "web-scaffold-"));
    workspaces.push(workspace);
    cpSync(ROOT, workspace, {
      recursive: true,
      filter: (entry) => {
        const base = path.basename(entry);
        return !SKIPPED.has(base) && !base.endsWith(".log");
      },
    });
    interface BuildError extends Error {
      status?: number;
      stderr?: string;
    }
    let failure: BuildError | null = null;
    try {
      build(workspace, "block-host");
    } catch (error) {
      failure = error as BuildError;
    }
    expect(failure?.status).toBe(1);
    expect(failure?.stderr).toContain("sentinel");
  });

  it("rejects a candidate that does not compile", () => {
    const workspace = instantiate("block-host", "const = nope;\n");
    interface BuildError extends Error {
      status?: number;
      stdout?: string;
      stderr?: string;
    }
    let failure: BuildError | null = null;
    try {
      build(workspace, "block-host");
    } catch (error) {
      failure = error as BuildError;
    }
    expect(failure).not.toBeNull();
    expect(failure?.status).not.toBe(0);
    expect(`${failure?.stdout ?? ""}${failure?.stderr ?? ""}`).toContain("candidate.tsx");
  });

  it("produces byte-identical output across instantiations", () => {
    const first = instantiate("block-host", helloBlock);
    const second = instantiate("block-host", helloBlock);
    build(first, "block-host");
    build(second, "block-host");
    expect(distFiles(first)).toEqual(distFiles(second));
    for (const name of distFiles(first)) {
      const a = readFileSync(path.join(first, "dist", name));
      const b = readFileSync(path.join(second, "dist", name));
      expect(a.equals(b), `${name} identical`).toBe(true);
    }
  });
});

describe("runtime bundle", () => {
  it("exports the surface the relink step points imports at", async () => {
    const runtime = await import(pathToFileURL(path.join(ROOT, "vendor", "runtime.js")).href);
    expect(typeof runtime.default.createElement).toBe("function");
    expect(typeof runtime.createElement).toBe("function");
    expect(typeof runtime.useState).toBe("function");
    expect(typeof runtime.useEffect).toBe("function");
    expect(typeof runtime.Fragment).not.toBe("undefined");
    expect(typeof runtime.createRoot).toBe("function");
  });
});
