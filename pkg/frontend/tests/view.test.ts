import { describe, expect, it } from "vitest";

import {
  escapeHtml,
  renderAlphaTable,
  renderCertificates,
  renderNumeral,
  renderProgram,
  renderRejection,
  renderReport,
} from "../src/view.js";

describe("renderAlphaTable", () => {
  it("fresh session renders an empty store", () => {
    const html = renderAlphaTable({ version: 0, unchanged: false, entries: [] });
    expect(html).toContain("store is empty");
    expect(html).toContain('data-version="0"');
    expect(html).toContain("version 0");
  });

  it("rows carry slot, value and provenance; snapshot version shown", () => {
    const html = renderAlphaTable({
      version: 2,
      unchanged: false,
      entries: [
        { slot: 0, index: "501", provenance: "feed" },
        { slot: 3, index: "0", provenance: "query" },
      ],
    });
    expect(html).toContain("<td>0</td>");
    expect(html).toContain("<td>3</td>");
    expect(html).toContain("501");
    expect(html).toContain('class="prov-feed"');
    expect(html).toContain('class="prov-query"');
    expect(html).toContain('data-version="2"');
  });
});

describe("renderNumeral", () => {
  it("big numerals are elided with the full value stashed for expansion", () => {
    const big = "123456789012" + "0".repeat(100) + "987654321098";
    const html = renderNumeral(big);
    expect(html).toContain('class="numeral elided"');
    expect(html).toContain(`data-full="${big}"`);
    expect(html).toContain("digits)");
    expect(html.length).toBeLessThan(big.length + 200);
  });

  it("small numerals render as-is", () => {
    expect(renderNumeral("42")).toBe('<span class="numeral">42</span>');
  });
});

describe("renderProgram", () => {
  it("shows pretty text and structural form", () => {
    const html = renderProgram({
      index: "7",
      pretty: "set r0 0\n",
      tree: [{ kind: "SetConst", reg: 0, value: "0" }],
    });
    expect(html).toContain("set r0 0");
    expect(html).toContain("SetConst");
  });

  it("escapes markup in program text", () => {
    const html = renderProgram({ index: "7", pretty: "<script>", tree: [] });
    expect(html).not.toContain("<script>");
    expect(html).toContain("&lt;script&gt;");
  });
});

describe("renderCertificates", () => {
  it("nests premises that are themselves certified", () => {
    const html = renderCertificates({
      version: 3,
      records: [
        { claim: "total", subject: "7", kind: "syntactic", premises: [] },
        { claim: "total", subject: "900", kind: "psi", premises: ["7"] },
      ],
    });
    expect(html).toContain("by psi");
    expect(html).toContain("by syntactic");
    expect(html).toContain("<ul>"); // a derivation with children
  });

  it("empty registry says so", () => {
    expect(renderCertificates({ version: 0, records: [] })).toContain("no certificates");
  });
});

describe("renderReport", () => {
  it("shows verdict and one line per n", () => {
    const html = renderReport({
      check: "diagonal",
      enumerator: "7",
      verdict: true,
      inconclusive: 0,
      lines: [
        { n: 0, status: "pass", detail: "" },
        { n: 1, status: "pass", detail: "" },
      ],
    });
    expect(html).toContain("verdict true");
    expect(html).toContain("n=0 pass");
    expect(html).toContain("n=1 pass");
  });

  it("marks failures and inconclusives distinctly", () => {
    const html = renderReport({
      check: "escape",
      enumerator: "7",
      verdict: false,
      inconclusive: 1,
      lines: [
        { n: 0, status: "fail", detail: "collision" },
        { n: 1, status: "inconclusive", detail: "fuel" },
      ],
    });
    expect(html).toContain('class="check-fail"');
    expect(html).toContain('class="check-inconclusive"');
    expect(html).toContain("1 inconclusive");
  });
});

describe("renderRejection", () => {
  it("names the unmet condition inline", () => {
    const html = renderRejection("42", "no enum certificate for subject 42");
    expect(html).toContain('role="alert"');
    expect(html).toContain("no enum certificate");
  });
});

describe("escapeHtml", () => {
  it("escapes the four specials", () => {
    expect(escapeHtml(`<a href="x">&`)).toBe("&lt;a href=&quot;x&quot;&gt;&amp;");
  });
});
