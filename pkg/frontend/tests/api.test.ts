import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, Client } from "../src/api.js";
import {
  FIXTURES,
  startFixtureServer,
  type FixtureServer,
} from "./fixture-server.js";

let server: FixtureServer;
let client: Client;

beforeAll(async () => {
  server = await startFixtureServer();
  client = new Client(server.baseUrl);
});

afterAll(async () => {
  await server.close();
});

describe("info contract", () => {
  it("returns vocabulary metadata", async () => {
    const info = await client.info();
    expect(info).toEqual(FIXTURES.info);
  });
});

describe("similarity contract", () => {
  it("echoes the word pair with a numeric score", async () => {
    const res = await client.similarity("αθήνα", "πόλη");
    expect(res.w1).toBe("αθήνα");
    expect(res.w2).toBe("πόλη");
    expect(typeof res.score).toBe("number");
  });

  it("throws ApiError 404 naming the unknown word", async () => {
    const err = await client.similarity("αθήνα", "zzz").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(404);
    expect(err.word).toBe("zzz");
    expect(err.message).toContain("zzz");
  });
});

describe("most_similar contract", () => {
  it("returns scored neighbors", async () => {
    const res = await client.mostSimilar("αθήνα", 2);
    expect(res.w).toBe("αθήνα");
    expect(res.neighbors).toEqual(FIXTURES.neighbors);
    for (const n of res.neighbors) {
      expect(typeof n.word).toBe("string");
      expect(typeof n.score).toBe("number");
    }
  });

  it("surfaces 400 for out-of-range k", async () => {
    const err = await client.mostSimilar("αθήνα", 0).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(400);
    expect(err.word).toBeUndefined();
  });
});

describe("analogy contract", () => {
  it("returns the query and ranked results", async () => {
    const res = await client.analogy("αθήνα", "πόλη", "θάλασσα", 5);
    expect(res.query).toEqual({ a: "αθήνα", b: "πόλη", c: "θάλασσα" });
    expect(res.results).toEqual(FIXTURES.analogy);
  });
});

describe("compare contract", () => {
  it("POSTs both groups as JSON and reads the score", async () => {
    const res = await client.compare(["αθήνα", "πόλη"], ["θάλασσα"]);
    expect(res.score).toBe(FIXTURES.compareScore);
    expect(server.lastCompareBody()).toEqual({
      group1: ["αθήνα", "πόλη"],
      group2: ["θάλασσα"],
    });
  });

  it("surfaces 400 for an empty group", async () => {
    const err = await client.compare([], ["αθήνα"]).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(400);
  });
});

describe("map contract", () => {
  it("returns clustered 2-D points and the KL value", async () => {
    const res = await client.map(500, 10);
    expect(res).toEqual(FIXTURES.map);
    for (const p of res.points) {
      expect(typeof p.x).toBe("number");
      expect(typeof p.y).toBe("number");
      expect(Number.isInteger(p.cluster)).toBe(true);
    }
  });

  it("surfaces 400 for n out of range", async () => {
    const err = await client.map(1, 1).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(400);
  });
});
